#ifndef LGV_RECIPROCITY_HPP
#define LGV_RECIPROCITY_HPP

#include "lgv/matrix.hpp"
#include "lgv/network.hpp"
#include "lgv/recurrence.hpp"
#include "lgv/subsets.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgv {

struct ReciprocityRow {
    long long n;
    Rational f_neg;        // f(I,J;-n)
    int sign;              // (-1)^{sigma(I)+sigma(J)}
    Rational det_pow_neg;  // det(P_G)^{-n}
    Rational f_comp;       // f(J^c,I^c;n)
    bool pass;             // f_neg == sign * det_pow_neg * f_comp
};

struct ReciprocityReport {
    std::string network;
    SubsetIndex I, J;
    Rational det;
    std::vector<ReciprocityRow> rows;
    bool all_pass = true;
};

/// Computes f_G(I,J;n) through compound-matrix powers of the path matrix,
/// caching the compound/adjugate matrices and their powers per k so that
/// sweeps over many subset pairs stay cheap.
class ReciprocityEngine {
public:
    explicit ReciprocityEngine(const PlanarNetwork& net)
        : name_(net.name()), m_(net.boundary_size()), p_(path_matrix(net)),
          det_(det_bareiss(p_)) {}

    int boundary_size() const { return m_; }
    const Matrix& path_mat() const { return p_; }
    const Rational& det() const { return det_; }

    /// Entry (I,J) of com_k(P)^n; k = 0 gives 1, n = 0 gives [I == J].
    Rational f_value(const SubsetIndex& i, const SubsetIndex& j, long long n) {
        check_pair(i, j);
        if (n < 0) throw std::invalid_argument("f_value: negative n (use f_negative)");
        if (i.size() == 0) return Rational(1);
        Slot& s = slot(i.size());
        const Matrix& mat = power(s, n, /*negative=*/false);
        return mat(static_cast<int>(subset_lex_rank(i)), static_cast<int>(subset_lex_rank(j)));
    }

    /// Entry (I,J) of (com_k(P)^{-1})^n, computed as adjugate powers over
    /// det powers. Requires det(P) != 0.
    Rational f_negative(const SubsetIndex& i, const SubsetIndex& j, long long n) {
        check_pair(i, j);
        if (n < 0) throw std::invalid_argument("f_negative: n must be >= 0");
        ensure_invertible();
        if (i.size() == 0) return Rational(1);
        Slot& s = slot(i.size());
        const Matrix& mat = power(s, n, /*negative=*/true);
        return mat(static_cast<int>(subset_lex_rank(i)), static_cast<int>(subset_lex_rank(j)));
    }

    /// Linear recurrence satisfied by n -> f(I,J;n): characteristic
    /// polynomial of com_k(P) with the first C(m,k) values as seeds.
    LinearRecurrence f_recurrence(const SubsetIndex& i, const SubsetIndex& j) {
        check_pair(i, j);
        ensure_invertible();
        if (i.size() == 0)
            return LinearRecurrence::from_char_poly(
                Polynomial({Rational(-1), Rational(1)}), {Rational(1)});
        Slot& s = slot(i.size());
        if (s.charpoly.is_zero()) s.charpoly = char_poly(s.com);
        const int d = s.charpoly.degree();
        std::vector<Rational> initial;
        initial.reserve(static_cast<std::size_t>(d));
        for (int n = 0; n < d; ++n) initial.push_back(f_value(i, j, n));
        return LinearRecurrence::from_char_poly(s.charpoly, std::move(initial));
    }

    /// Compares f(I,J;-n) with (-1)^{sigma(I)+sigma(J)} det(P)^{-n}
    /// f(J^c,I^c;n) for n = 1..n_max. All comparisons are exact.
    ReciprocityReport check(const SubsetIndex& i, const SubsetIndex& j, int n_max) {
        check_pair(i, j);
        ensure_invertible();
        ReciprocityReport rep;
        rep.network = name_;
        rep.I = i;
        rep.J = j;
        rep.det = det_;
        const SubsetIndex jc = j.complement(), ic = i.complement();
        const int sign = (i.sigma() + j.sigma()) % 2 == 0 ? 1 : -1;
        for (int n = 1; n <= n_max; ++n) {
            ReciprocityRow row;
            row.n = n;
            row.sign = sign;
            row.f_neg = f_negative(i, j, n);
            row.det_pow_neg = pow(det_, -static_cast<long long>(n));
            row.f_comp = f_value(jc, ic, n);
            Rational rhs = Rational(sign) * row.det_pow_neg * row.f_comp;
            row.pass = row.f_neg == rhs;
            rep.all_pass = rep.all_pass && row.pass;
            rep.rows.push_back(std::move(row));
        }
        return rep;
    }

private:
    struct Slot {
        Matrix com, adj_over_det;
        std::vector<Matrix> pos_pows, neg_pows; // index n -> n-th power
        Polynomial charpoly;
    };

    void check_pair(const SubsetIndex& i, const SubsetIndex& j) const {
        if (i.size() != j.size()) throw std::invalid_argument("subset sizes |I| and |J| differ");
        if (i.ambient != m_ || j.ambient != m_)
            throw std::invalid_argument("subset ambient does not match the network boundary");
    }

    void ensure_invertible() const {
        if (det_.is_zero()) throw std::domain_error("path matrix is singular");
    }

    Slot& slot(int k) {
        auto it = slots_.find(k);
        if (it != slots_.end()) return it->second;
        Slot s;
        s.com = compound_matrix(p_, k);
        if (!det_.is_zero())
            s.adj_over_det = (Rational(1) / det_) * adjugate_matrix(p_, k);
        s.pos_pows.push_back(Matrix::identity(s.com.rows()));
        s.neg_pows.push_back(Matrix::identity(s.com.rows()));
        return slots_.emplace(k, std::move(s)).first->second;
    }

    const Matrix& power(Slot& s, long long n, bool negative) {
        auto& pows = negative ? s.neg_pows : s.pos_pows;
        const Matrix& step = negative ? s.adj_over_det : s.com;
        while (static_cast<long long>(pows.size()) <= n)
            pows.push_back(pows.back() * step);
        return pows[static_cast<std::size_t>(n)];
    }

    std::string name_;
    int m_;
    Matrix p_;
    Rational det_;
    std::map<int, Slot> slots_;
};

/// One-shot conveniences over a transient engine.
inline Rational f_value(const PlanarNetwork& net, const SubsetIndex& i, const SubsetIndex& j,
                        long long n) {
    return ReciprocityEngine(net).f_value(i, j, n);
}

inline Rational f_negative(const PlanarNetwork& net, const SubsetIndex& i, const SubsetIndex& j,
                           long long n) {
    return ReciprocityEngine(net).f_negative(i, j, n);
}

inline LinearRecurrence f_recurrence(const PlanarNetwork& net, const SubsetIndex& i,
                                     const SubsetIndex& j) {
    return ReciprocityEngine(net).f_recurrence(i, j);
}

inline ReciprocityReport check_reciprocity(const PlanarNetwork& net, const SubsetIndex& i,
                                           const SubsetIndex& j, int n_max) {
    return ReciprocityEngine(net).check(i, j, n_max);
}

} // namespace lgv

#endif // LGV_RECIPROCITY_HPP
