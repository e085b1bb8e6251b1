#include "lgv/dyck.hpp"

#include "lgv/recurrence.hpp"
#include "lgv/reciprocity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lgv {

DyckPath::DyckPath(std::vector<int> steps) : steps_(std::move(steps)) {
    if (steps_.size() % 2 != 0)
        throw std::invalid_argument("DyckPath: odd number of steps");
    heights_.reserve(steps_.size() + 1);
    heights_.push_back(0);
    int h = 0;
    for (int s : steps_) {
        if (s != 1 && s != -1) throw std::invalid_argument("DyckPath: steps must be +1/-1");
        h += s;
        if (h < 0) throw std::invalid_argument("DyckPath: path dips below the axis");
        max_height_ = std::max(max_height_, h);
        heights_.push_back(h);
    }
    if (h != 0) throw std::invalid_argument("DyckPath: path does not return to the axis");
}

std::vector<DyckPath> DyckPath::all(int n, std::optional<int> bound) {
    if (n < 0) throw std::invalid_argument("DyckPath::all: negative semilength");
    std::vector<DyckPath> out;
    std::vector<int> steps;
    steps.reserve(static_cast<std::size_t>(2 * n));
    // up steps before down steps gives lexicographic order
    auto rec = [&](auto&& self, int pos, int h) -> void {
        if (pos == 2 * n) {
            out.push_back(DyckPath(steps));
            return;
        }
        const int remaining = 2 * n - pos;
        if ((!bound || h < *bound) && h + 1 <= remaining - 1) {
            steps.push_back(1);
            self(self, pos + 1, h + 1);
            steps.pop_back();
        }
        if (h > 0) {
            steps.push_back(-1);
            self(self, pos + 1, h - 1);
            steps.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

bool stays_weakly_below(const DyckPath& d, const DyckPath& dprime) {
    if (d.semilength() != dprime.semilength())
        throw std::invalid_argument("stays_weakly_below: semilengths differ");
    const auto& a = d.heights();
    const auto& b = dprime.heights();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

DyckFan::DyckFan(int n, std::vector<DyckPath> ps) : semilength(n), paths(std::move(ps)) {
    for (std::size_t a = 0; a < paths.size(); ++a) {
        if (paths[a].semilength() != n)
            throw std::invalid_argument("DyckFan: semilength mismatch");
        if (a > 0 && !stays_weakly_below(paths[a - 1], paths[a]))
            throw std::invalid_argument("DyckFan: paths are not nested bottom to top");
    }
}

bool PlanePartition::shape_matches() const {
    if (!outer.contains(inner)) return false;
    if (static_cast<int>(rows.size()) != outer.length()) return false;
    for (int i = 1; i <= outer.length(); ++i)
        if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) !=
            outer.part(i) - inner.part(i))
            return false;
    return true;
}

int PlanePartition::entry(int i, int j) const {
    if (i < 1 || i > outer.length() || j <= inner.part(i) || j > outer.part(i))
        throw std::out_of_range("PlanePartition: cell outside the skew shape");
    return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - inner.part(i) - 1)];
}

bool PlanePartition::is_weakly_decreasing() const {
    if (!shape_matches()) return false;
    for (int i = 1; i <= outer.length(); ++i)
        for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) {
            if (entry(i, j) < 0) return false;
            if (j + 1 <= outer.part(i) && entry(i, j) < entry(i, j + 1)) return false;
            // cell below, if the skew shape has one
            if (i + 1 <= outer.length() && j > inner.part(i + 1) && j <= outer.part(i + 1) &&
                entry(i, j) < entry(i + 1, j))
                return false;
        }
    return true;
}

PlanarNetwork build_dyck_network(int m, int k) {
    if (m < 0 || k < 0 || m + k < 1)
        throw std::invalid_argument("build_dyck_network: need m, k >= 0 and m + k >= 1");
    const int w = m + k;
    std::vector<std::string> vs;
    std::vector<std::string> sources, sinks;
    for (int i = 1; i <= w; ++i) sources.push_back("s" + std::to_string(i));
    for (int i = 1; i <= w; ++i) sinks.push_back("t" + std::to_string(i));
    vs = sources;
    for (int i = 1; i <= w; ++i) vs.push_back("m" + std::to_string(i));
    vs.insert(vs.end(), sinks.begin(), sinks.end());

    std::vector<EdgeSpec> es;
    for (int i = 1; i <= w; ++i) {
        if (i - 1 >= 1) es.push_back({"s" + std::to_string(i), "m" + std::to_string(i - 1), Rational(1)});
        es.push_back({"s" + std::to_string(i), "m" + std::to_string(i), Rational(1)});
    }
    for (int i = 1; i <= w; ++i) {
        es.push_back({"m" + std::to_string(i), "t" + std::to_string(i), Rational(1)});
        if (i + 1 <= w) es.push_back({"m" + std::to_string(i), "t" + std::to_string(i + 1), Rational(1)});
    }
    return PlanarNetwork(vs, es, sources, sinks,
                         "dyck_m" + std::to_string(m) + "_k" + std::to_string(k));
}

namespace {

SubsetIndex first_m_subset(int m, int ambient) {
    std::vector<int> elems;
    for (int v = 1; v <= m; ++v) elems.push_back(v);
    return SubsetIndex(std::move(elems), ambient);
}

} // namespace

Rational d_value(int m, int k, long long n) {
    const PlanarNetwork net = build_dyck_network(m, k);
    ReciprocityEngine engine(net);
    const SubsetIndex I = first_m_subset(m, m + k);
    if (n >= 0) return engine.f_value(I, I, n);
    return engine.f_negative(I, I, -n);
}

std::vector<DyckFan> enumerate_fans(int m, std::optional<int> bound, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("enumerate_fans: negative argument");
    const auto paths = DyckPath::all(n, bound);
    double candidates = 1;
    for (int a = 0; a < m; ++a) {
        candidates *= static_cast<double>(paths.size());
        if (candidates > 1e7)
            throw CapacityError("enumerate_fans refuses instance with more than 10^7 candidate tuples");
    }

    std::vector<DyckFan> out;
    std::vector<DyckPath> cur;
    auto rec = [&](auto&& self, int level) -> void {
        if (level == m) {
            out.push_back(DyckFan(n, cur));
            return;
        }
        for (std::size_t p = 0; p < paths.size(); ++p) {
            if (!cur.empty() && !stays_weakly_below(cur.back(), paths[p])) continue;
            cur.push_back(paths[p]);
            self(self, level + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

PlanePartition fan_to_plane_partition(const DyckFan& fan, std::optional<int> bound) {
    const int n = fan.semilength;
    if (bound) {
        if (*bound < 1) throw std::invalid_argument("fan_to_plane_partition: bound must be >= 1");
        for (const auto& p : fan.paths)
            if (!p.bounded_by(*bound))
                throw std::invalid_argument(
                    "fan_to_plane_partition: fan exceeds the declared bound");
    }
    PlanePartition pp;
    pp.outer = Partition::staircase(n);
    pp.inner = bound ? Partition::staircase(n - *bound + 1) : Partition();
    pp.rows.resize(static_cast<std::size_t>(pp.outer.length()));
    for (int i = 1; i <= pp.outer.length(); ++i) {
        for (int j = pp.inner.part(i) + 1; j <= pp.outer.part(i); ++j) {
            // cell (i,j) sits over lattice position x with the gap centered
            // at height y; the entry counts the paths passing strictly below
            const int x = n + j - i;
            const int y = n + 1 - i - j;
            int below = 0;
            for (const auto& p : fan.paths)
                if (p.heights()[static_cast<std::size_t>(x)] < y) ++below;
            pp.rows[static_cast<std::size_t>(i - 1)].push_back(below);
        }
    }
    return pp;
}

DyckFan fan_from_plane_partition(const PlanePartition& pp, int m, int n,
                                 std::optional<int> bound) {
    if (!pp.shape_matches())
        throw std::invalid_argument("fan_from_plane_partition: malformed plane partition");
    std::vector<DyckPath> paths;
    paths.reserve(static_cast<std::size_t>(m));
    for (int a = 1; a <= m; ++a) {
        std::vector<int> h(static_cast<std::size_t>(2 * n) + 1, 0);
        for (int x = 0; x <= 2 * n; ++x) {
            int best = x % 2;
            for (int i = 1; i <= pp.outer.length(); ++i) {
                for (int j = pp.inner.part(i) + 1; j <= pp.outer.part(i); ++j) {
                    if (n + j - i != x) continue;
                    const int y = n + 1 - i - j;
                    if (pp.entry(i, j) < a) best = std::max(best, y + 1);
                }
            }
            h[static_cast<std::size_t>(x)] = best;
        }
        std::vector<int> steps(static_cast<std::size_t>(2 * n));
        for (int x = 1; x <= 2 * n; ++x)
            steps[static_cast<std::size_t>(x - 1)] =
                h[static_cast<std::size_t>(x)] - h[static_cast<std::size_t>(x - 1)];
        paths.push_back(DyckPath(std::move(steps)));
        if (bound && !paths.back().bounded_by(*bound))
            throw std::invalid_argument("fan_from_plane_partition: recovered path exceeds bound");
    }
    return DyckFan(n, std::move(paths));
}

std::vector<int> plane_partition_reading(const PlanePartition& pp) {
    if (!pp.shape_matches())
        throw std::invalid_argument("plane_partition_reading: malformed plane partition");
    const int n = pp.outer.empty() ? 1 : pp.outer.part(1) + 1;
    std::vector<std::pair<std::pair<int, int>, int>> keyed; // ((x, y), entry)
    for (int i = 1; i <= pp.outer.length(); ++i)
        for (int j = pp.inner.part(i) + 1; j <= pp.outer.part(i); ++j)
            keyed.push_back({{n + j - i, n + 1 - i - j}, pp.entry(i, j)});
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> out;
    out.reserve(keyed.size());
    for (const auto& kv : keyed) out.push_back(kv.second);
    return out;
}

Rational proctor_count(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("proctor_count: need n >= 1, m >= 0");
    Rational prod(1);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            prod *= Rational(2 * m + i + j - 1, i + j - 1);
    return prod;
}

Rational alternating_sequence_count(int m, int n) {
    if (m < 0 || n < 2) throw std::invalid_argument("alternating_sequence_count: need m >= 0, n >= 2");
    const int len = 2 * n - 3;
    double candidates = 1;
    for (int i = 0; i < len; ++i) {
        candidates *= m + 1;
        if (candidates > 1e7)
            throw CapacityError(
                "alternating_sequence_count refuses instance with more than 10^7 candidates");
    }
    long long count = 0;
    std::vector<int> a(static_cast<std::size_t>(len), 0);
    // odd positions (1-based) sit in the valleys: a_1 <= a_2 >= a_3 <= ...
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == len) {
            ++count;
            return;
        }
        for (int v = 0; v <= m; ++v) {
            if (pos > 0) {
                const bool rising = pos % 2 == 1; // a[pos-1] <= a[pos] at even->odd index steps
                if (rising && v < a[static_cast<std::size_t>(pos - 1)]) continue;
                if (!rising && v > a[static_cast<std::size_t>(pos - 1)]) continue;
            }
            a[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return Rational(count);
}

DyckReciprocityReport check_dyck_reciprocity(int m, int k, int n_max) {
    if (m < 0 || k < 0 || m + k < 1)
        throw std::invalid_argument("check_dyck_reciprocity: need m, k >= 0 and m + k >= 1");
    DyckReciprocityReport rep;
    rep.m = m;
    rep.k = k;

    // left side: backward recurrence on the (m,k) network
    const PlanarNetwork net_mk = build_dyck_network(m, k);
    ReciprocityEngine eng_mk(net_mk);
    const SubsetIndex I_mk = first_m_subset(m, m + k);
    const LinearRecurrence rec = eng_mk.f_recurrence(I_mk, I_mk);

    // right side: forward compound powers on the (k,m) network
    const PlanarNetwork net_km = build_dyck_network(k, m);
    ReciprocityEngine eng_km(net_km);
    const SubsetIndex I_km = first_m_subset(k, m + k);

    for (int n = 1; n <= n_max; ++n) {
        DyckReciprocityRow row;
        row.n = n;
        row.lhs = rec.extend_negative(n);
        row.rhs = eng_km.f_value(I_km, I_km, n + 1);
        row.pass = row.lhs == row.rhs;
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace lgv
