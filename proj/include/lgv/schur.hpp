#ifndef LGV_SCHUR_HPP
#define LGV_SCHUR_HPP

#include "lgv/network.hpp"
#include "lgv/partitions.hpp"
#include "lgv/rational.hpp"
#include "lgv/subsets.hpp"

#include <utility>
#include <vector>

namespace lgv {

/// Evaluation point z = (z_1,...,z_k).
struct EvalPoint {
    std::vector<Rational> values;

    EvalPoint() = default;
    explicit EvalPoint(std::vector<Rational> vs) : values(std::move(vs)) {}

    int k() const { return static_cast<int>(values.size()); }

    EvalPoint reversed() const {
        return EvalPoint(std::vector<Rational>(values.rbegin(), values.rend()));
    }

    /// z^n: each block of k values repeated n times, total nk values.
    std::vector<Rational> repeated(int n) const {
        std::vector<Rational> out;
        out.reserve(static_cast<std::size_t>(n) * values.size());
        for (int rep = 0; rep < n; ++rep) out.insert(out.end(), values.begin(), values.end());
        return out;
    }
};

/// Grid network from the Schur proof with the vertical-edge weights kept
/// as column tags; instantiate() resolves tag i to z_i. The skeleton has
/// lambda_1 + l(lambda) horizontal tracks and k interior columns,
/// horizontal edges of weight one, and upward vertical edges inside each
/// interior column.
struct SchurNetwork {
    PlanarNetwork skeleton;        // tagged edges carry weight 1 placeholders
    std::vector<int> edge_column;  // 0 for horizontal, else 1-based column tag
    int tracks = 0;
    int columns = 0;

    PlanarNetwork instantiate(const EvalPoint& z) const;
};

SchurNetwork build_schur_network(const Partition& lambda, int k);

/// The source/sink subsets I = {mu_l+1, mu_{l-1}+2, ..., mu_1+l} and
/// J = {lambda_l+1, lambda_{l-1}+2, ..., lambda_1+l} with l = l(lambda),
/// inside [lambda_1 + l].
std::pair<SubsetIndex, SubsetIndex> schur_boundary_subsets(const SkewShape& shape);

/// s_{lambda/mu}(z^n) for any integer n: compound powers of the grid
/// network's path matrix for n >= 0, inverse powers for n < 0.
Rational schur_eval(const SkewShape& shape, const EvalPoint& z, long long n);

/// Semistandard tableau of a skew shape: rows weakly increase, columns
/// strictly increase. rows[i] holds the entries of row i+1.
struct Tableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;

    int entry(int i, int j) const;
    bool is_semistandard(int max_entry) const;
};

/// All SSYT of the shape with entries in 1..max_entry, capacity-guarded.
std::vector<Tableau> ssyt_enumerate(const SkewShape& shape, int max_entry);

/// Weighted sum over the tableaux with x_i := values[i-1]; the SSYT-side
/// oracle for schur_eval.
Rational ssyt_weighted_sum(const SkewShape& shape, const std::vector<Rational>& values);

/// e_m(z^n) = schur_eval on the single-column shape (1^m); m = 0 gives 1.
Rational elementary_eval(int m, const EvalPoint& z, long long n);

/// h_m(z^n) = schur_eval on the single-row shape (m); m = 0 gives 1.
Rational homogeneous_eval(int m, const EvalPoint& z, long long n);

/// p_m(z) = sum of z_j^m.
Rational power_sum_value(int m, const std::vector<Rational>& values);

/// p_lambda(z^n) = n^{l(lambda)} * prod_i p_{lambda_i}(z), a polynomial
/// in n valid for all integers.
Rational power_sum_eval(const Partition& lambda, const EvalPoint& z, long long n);

/// Hook-content product for straight shapes: s_lambda(1^n) =
/// prod_cells (n + content) / hook.
Rational hook_content(const Partition& lambda, long long n);

struct SchurReciprocityRow {
    long long n;
    Rational lhs;        // s_{lambda/mu}(z^{-n})
    Rational rhs;        // (-1)^{|lambda/mu|} s_{lambda^t/mu^t}(z_rev^n)
    Rational rhs_unrev;  // same with z unreversed; must agree by symmetry
    bool pass;
};

struct SchurReciprocityReport {
    SkewShape shape;
    std::vector<SchurReciprocityRow> rows;
    bool all_pass = true;
};

/// s_{lambda/mu}(z^{-n}) = (-1)^{|lambda/mu|} s_{lambda^t/mu^t}(z_rev^n)
/// for n = 1..n_max, cross-checked against the unreversed evaluation.
SchurReciprocityReport check_schur_reciprocity(const SkewShape& shape, const EvalPoint& z,
                                               int n_max);

} // namespace lgv

#endif // LGV_SCHUR_HPP
