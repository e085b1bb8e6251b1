#include "lgv/schur.hpp"

#include "lgv/reciprocity.hpp"

#include <stdexcept>
#include <string>

namespace lgv {

PlanarNetwork SchurNetwork::instantiate(const EvalPoint& z) const {
    if (z.k() != columns)
        throw std::invalid_argument("SchurNetwork: evaluation point has " +
                                    std::to_string(z.k()) + " values, network has " +
                                    std::to_string(columns) + " columns");
    std::vector<EdgeSpec> es = skeleton.edges();
    for (std::size_t ei = 0; ei < es.size(); ++ei) {
        const int col = edge_column[ei];
        if (col > 0) es[ei].weight = z.values[static_cast<std::size_t>(col - 1)];
    }
    return PlanarNetwork(skeleton.vertices(), es, skeleton.sources(), skeleton.sinks(),
                         skeleton.name());
}

SchurNetwork build_schur_network(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("build_schur_network: need k >= 1");
    const int tracks = std::max(lambda.part(1) + lambda.length(), 1);

    auto vid = [&](int col, int row) -> std::string {
        if (col == 0) return "s" + std::to_string(row);
        if (col == k + 1) return "t" + std::to_string(row);
        return "v" + std::to_string(col) + "_" + std::to_string(row);
    };

    std::vector<std::string> vs;
    std::vector<std::string> sources, sinks;
    for (int r = 1; r <= tracks; ++r) sources.push_back(vid(0, r));
    for (int r = 1; r <= tracks; ++r) sinks.push_back(vid(k + 1, r));
    for (int c = 0; c <= k + 1; ++c)
        for (int r = 1; r <= tracks; ++r) vs.push_back(vid(c, r));

    std::vector<EdgeSpec> es;
    std::vector<int> tags;
    for (int c = 0; c <= k; ++c)
        for (int r = 1; r <= tracks; ++r) {
            es.push_back({vid(c, r), vid(c + 1, r), Rational(1)});
            tags.push_back(0);
        }
    for (int c = 1; c <= k; ++c)
        for (int r = 1; r < tracks; ++r) {
            es.push_back({vid(c, r), vid(c, r + 1), Rational(1)});
            tags.push_back(c);
        }

    return SchurNetwork{PlanarNetwork(vs, es, sources, sinks,
                                      "schur_" + lambda.str() + "_k" + std::to_string(k)),
                        std::move(tags), tracks, k};
}

std::pair<SubsetIndex, SubsetIndex> schur_boundary_subsets(const SkewShape& shape) {
    const Partition& lambda = shape.outer;
    const Partition& mu = shape.inner;
    const int l = lambda.length();
    const int ambient = std::max(lambda.part(1) + l, 1);
    std::vector<int> i_elems, j_elems;
    for (int t = 1; t <= l; ++t) {
        i_elems.push_back(mu.part(l + 1 - t) + t);
        j_elems.push_back(lambda.part(l + 1 - t) + t);
    }
    return {SubsetIndex(std::move(i_elems), ambient), SubsetIndex(std::move(j_elems), ambient)};
}

Rational schur_eval(const SkewShape& shape, const EvalPoint& z, long long n) {
    const auto [I, J] = schur_boundary_subsets(shape);
    const PlanarNetwork net = build_schur_network(shape.outer, z.k()).instantiate(z);
    ReciprocityEngine engine(net);
    if (n >= 0) return engine.f_value(I, J, n);
    return engine.f_negative(I, J, -n);
}

int Tableau::entry(int i, int j) const {
    if (i < 1 || i > shape.outer.length() || j <= shape.inner.part(i) || j > shape.outer.part(i))
        throw std::out_of_range("Tableau: cell outside the skew shape");
    return rows[static_cast<std::size_t>(i - 1)]
               [static_cast<std::size_t>(j - shape.inner.part(i) - 1)];
}

bool Tableau::is_semistandard(int max_entry) const {
    if (static_cast<int>(rows.size()) != shape.outer.length()) return false;
    for (int i = 1; i <= shape.outer.length(); ++i)
        if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) !=
            shape.outer.part(i) - shape.inner.part(i))
            return false;
    for (int i = 1; i <= shape.outer.length(); ++i)
        for (int j = shape.inner.part(i) + 1; j <= shape.outer.part(i); ++j) {
            const int v = entry(i, j);
            if (v < 1 || v > max_entry) return false;
            if (j + 1 <= shape.outer.part(i) && v > entry(i, j + 1)) return false;
            if (i + 1 <= shape.outer.length() && j > shape.inner.part(i + 1) &&
                j <= shape.outer.part(i + 1) && v >= entry(i + 1, j))
                return false;
        }
    return true;
}

std::vector<Tableau> ssyt_enumerate(const SkewShape& shape, int max_entry) {
    if (max_entry < 0) throw std::invalid_argument("ssyt_enumerate: negative alphabet size");
    const auto cells = shape.cells();
    double candidates = 1;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        candidates *= std::max(max_entry, 1);
        if (candidates > 1e7)
            throw CapacityError("ssyt_enumerate refuses instance with more than 10^7 candidates");
    }

    Tableau t;
    t.shape = shape;
    t.rows.resize(static_cast<std::size_t>(shape.outer.length()));
    for (int i = 1; i <= shape.outer.length(); ++i)
        t.rows[static_cast<std::size_t>(i - 1)].assign(
            static_cast<std::size_t>(shape.outer.part(i) - shape.inner.part(i)), 0);

    std::vector<Tableau> out;
    auto rec = [&](auto&& self, std::size_t at) -> void {
        if (at == cells.size()) {
            out.push_back(t);
            return;
        }
        const auto [i, j] = cells[at];
        int lo = 1;
        if (j - 1 > shape.inner.part(i)) lo = std::max(lo, t.entry(i, j - 1));
        if (i > 1 && j > shape.inner.part(i - 1) && j <= shape.outer.part(i - 1))
            lo = std::max(lo, t.entry(i - 1, j) + 1);
        for (int v = lo; v <= max_entry; ++v) {
            t.rows[static_cast<std::size_t>(i - 1)]
                  [static_cast<std::size_t>(j - shape.inner.part(i) - 1)] = v;
            self(self, at + 1);
        }
    };
    rec(rec, 0);
    return out;
}

Rational ssyt_weighted_sum(const SkewShape& shape, const std::vector<Rational>& values) {
    const auto tableaux = ssyt_enumerate(shape, static_cast<int>(values.size()));
    Rational total(0);
    for (const Tableau& t : tableaux) {
        Rational w(1);
        for (const auto& row : t.rows)
            for (int v : row) w *= values[static_cast<std::size_t>(v - 1)];
        total += w;
    }
    return total;
}

namespace {

Partition column_shape(int m) {
    return Partition(std::vector<int>(static_cast<std::size_t>(m), 1));
}

Partition row_shape(int m) {
    return m == 0 ? Partition() : Partition({m});
}

} // namespace

Rational elementary_eval(int m, const EvalPoint& z, long long n) {
    if (m < 0) throw std::invalid_argument("elementary_eval: negative degree");
    return schur_eval(SkewShape(column_shape(m), Partition()), z, n);
}

Rational homogeneous_eval(int m, const EvalPoint& z, long long n) {
    if (m < 0) throw std::invalid_argument("homogeneous_eval: negative degree");
    return schur_eval(SkewShape(row_shape(m), Partition()), z, n);
}

Rational power_sum_value(int m, const std::vector<Rational>& values) {
    if (m < 1) throw std::invalid_argument("power_sum_value: degree must be >= 1");
    Rational s(0);
    for (const auto& v : values) s += pow(v, m);
    return s;
}

Rational power_sum_eval(const Partition& lambda, const EvalPoint& z, long long n) {
    Rational result = pow(Rational(n), lambda.length());
    for (int i = 1; i <= lambda.length(); ++i)
        result *= power_sum_value(lambda.part(i), z.values);
    return result;
}

Rational hook_content(const Partition& lambda, long long n) {
    const Partition t = lambda.transposed();
    Rational result(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            const long long content = j - i;
            const long long hook = (lambda.part(i) - j) + (t.part(j) - i) + 1;
            result *= Rational(BigInt(n + content), BigInt(hook));
        }
    return result;
}

SchurReciprocityReport check_schur_reciprocity(const SkewShape& shape, const EvalPoint& z,
                                               int n_max) {
    SchurReciprocityReport rep;
    rep.shape = shape;
    const SkewShape tshape = shape.transposed();
    const int sign = shape.size() % 2 == 0 ? 1 : -1;

    const auto [I, J] = schur_boundary_subsets(shape);
    const auto [It, Jt] = schur_boundary_subsets(tshape);
    const SchurNetwork grid = build_schur_network(shape.outer, z.k());
    const SchurNetwork tgrid = build_schur_network(tshape.outer, z.k());
    ReciprocityEngine neg_side(grid.instantiate(z));
    ReciprocityEngine rev_side(tgrid.instantiate(z.reversed()));
    ReciprocityEngine unrev_side(tgrid.instantiate(z));

    for (int n = 1; n <= n_max; ++n) {
        SchurReciprocityRow row;
        row.n = n;
        row.lhs = neg_side.f_negative(I, J, n);
        row.rhs = Rational(sign) * rev_side.f_value(It, Jt, n);
        row.rhs_unrev = Rational(sign) * unrev_side.f_value(It, Jt, n);
        row.pass = row.lhs == row.rhs && row.lhs == row.rhs_unrev;
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace lgv
