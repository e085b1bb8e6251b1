#include "lgv/network.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <sstream>

namespace lgv {

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].message;
    }
    return os.str();
}

PlanarNetwork::PlanarNetwork(std::vector<std::string> vertices, std::vector<EdgeSpec> edges,
                             std::vector<std::string> sources, std::vector<std::string> sinks,
                             std::string name)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), sources_(std::move(sources)),
      sinks_(std::move(sinks)), name_(std::move(name)) {
    auto add = [&](Violation::Kind k, std::string msg) {
        report_.violations.push_back({k, std::move(msg)});
    };

    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        auto [it, fresh] = index_.emplace(vertices_[i], static_cast<int>(i));
        if (!fresh) add(Violation::Kind::duplicate_vertex, "duplicate vertex id '" + vertices_[i] + "'");
    }

    auto lookup = [&](const std::string& id, const char* where) -> int {
        auto it = index_.find(id);
        if (it == index_.end()) {
            add(Violation::Kind::unknown_vertex,
                std::string("unknown vertex id '") + id + "' in " + where);
            return -1;
        }
        return it->second;
    };

    const int nv = static_cast<int>(vertices_.size());
    std::vector<int> indeg(static_cast<std::size_t>(nv), 0), outdeg(static_cast<std::size_t>(nv), 0);
    edge_from_.reserve(edges_.size());
    edge_to_.reserve(edges_.size());
    bool endpoints_ok = true;
    for (const auto& e : edges_) {
        int u = lookup(e.from, "an edge");
        int v = lookup(e.to, "an edge");
        edge_from_.push_back(u);
        edge_to_.push_back(v);
        if (u < 0 || v < 0) { endpoints_ok = false; continue; }
        ++outdeg[static_cast<std::size_t>(u)];
        ++indeg[static_cast<std::size_t>(v)];
    }

    if (sources_.size() != sinks_.size())
        add(Violation::Kind::boundary_count_mismatch,
            "source count " + std::to_string(sources_.size()) + " != sink count " +
                std::to_string(sinks_.size()));

    source_idx_.reserve(sources_.size());
    for (const auto& s : sources_) source_idx_.push_back(lookup(s, "the source list"));
    sink_idx_.reserve(sinks_.size());
    for (const auto& t : sinks_) sink_idx_.push_back(lookup(t, "the sink list"));

    for (std::size_t j = 0; j < source_idx_.size(); ++j) {
        int v = source_idx_[j];
        if (v >= 0 && indeg[static_cast<std::size_t>(v)] != 0)
            add(Violation::Kind::source_indegree,
                "source '" + sources_[j] + "' has indegree " +
                    std::to_string(indeg[static_cast<std::size_t>(v)]));
    }
    for (std::size_t j = 0; j < sink_idx_.size(); ++j) {
        int v = sink_idx_[j];
        if (v >= 0 && outdeg[static_cast<std::size_t>(v)] != 0)
            add(Violation::Kind::sink_outdegree,
                "sink '" + sinks_[j] + "' has outdegree " +
                    std::to_string(outdeg[static_cast<std::size_t>(v)]));
    }

    // Sources and sinks must be disjoint, except that the degenerate G^0
    // shape (s_j and t_j the same isolated vertex) is allowed.
    if (sources_.size() == sinks_.size()) {
        std::set<int> src_set(source_idx_.begin(), source_idx_.end());
        for (std::size_t j = 0; j < sink_idx_.size(); ++j) {
            int v = sink_idx_[j];
            if (v < 0 || src_set.find(v) == src_set.end()) continue;
            bool degenerate_ok = source_idx_[j] == v && indeg[static_cast<std::size_t>(v)] == 0 &&
                                 outdeg[static_cast<std::size_t>(v)] == 0;
            if (!degenerate_ok)
                add(Violation::Kind::boundary_overlap,
                    "vertex '" + sinks_[j] + "' is both a source and a sink");
        }
    }

    // Deterministic adjacency: out-edges ordered by (target id, index).
    out_edges_.assign(static_cast<std::size_t>(nv), {});
    if (endpoints_ok) {
        for (std::size_t ei = 0; ei < edges_.size(); ++ei)
            out_edges_[static_cast<std::size_t>(edge_from_[ei])].push_back(static_cast<int>(ei));
        for (auto& lst : out_edges_)
            std::sort(lst.begin(), lst.end(), [&](int a, int b) {
                const std::string& ta = vertices_[static_cast<std::size_t>(edge_to_[static_cast<std::size_t>(a)])];
                const std::string& tb = vertices_[static_cast<std::size_t>(edge_to_[static_cast<std::size_t>(b)])];
                if (ta != tb) return ta < tb;
                return a < b;
            });

        // Kahn's algorithm with a min-heap on vertex id for determinism.
        auto cmp = [&](int a, int b) { return vertices_[static_cast<std::size_t>(a)] > vertices_[static_cast<std::size_t>(b)]; };
        std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
        std::vector<int> deg = indeg;
        for (int v = 0; v < nv; ++v)
            if (deg[static_cast<std::size_t>(v)] == 0) ready.push(v);
        topo_.reserve(static_cast<std::size_t>(nv));
        while (!ready.empty()) {
            int v = ready.top();
            ready.pop();
            topo_.push_back(v);
            for (int ei : out_edges_[static_cast<std::size_t>(v)]) {
                int w = edge_to_[static_cast<std::size_t>(ei)];
                if (--deg[static_cast<std::size_t>(w)] == 0) ready.push(w);
            }
        }
        if (static_cast<int>(topo_.size()) != nv) {
            add(Violation::Kind::cycle, "directed cycle detected");
            topo_.clear();
        }
    }
}

int PlanarNetwork::vertex_index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("unknown vertex id '" + id + "'");
    return it->second;
}

const std::vector<int>& PlanarNetwork::topological_order() const {
    ensure_valid();
    return topo_;
}

Rational PlanarNetwork::path_weight(const Path& p) const {
    Rational w(1);
    for (int ei : p.edges) w *= edges_[static_cast<std::size_t>(ei)].weight;
    return w;
}

std::vector<int> PlanarNetwork::path_vertices(const Path& p) const {
    std::vector<int> vs;
    vs.reserve(p.edges.size() + 1);
    vs.push_back(p.start);
    for (int ei : p.edges) vs.push_back(edge_to_[static_cast<std::size_t>(ei)]);
    return vs;
}

Matrix path_matrix(const PlanarNetwork& net) {
    net.ensure_valid();
    const int m = net.boundary_size();
    const auto& topo = net.topological_order();
    Matrix p(m, m);
    std::vector<Rational> acc(net.vertices_.size());
    for (int i = 0; i < m; ++i) {
        std::fill(acc.begin(), acc.end(), Rational(0));
        acc[static_cast<std::size_t>(net.source_idx_[static_cast<std::size_t>(i)])] = Rational(1);
        for (int v : topo) {
            const Rational& wv = acc[static_cast<std::size_t>(v)];
            if (wv.is_zero()) continue;
            for (int ei : net.out_edges_[static_cast<std::size_t>(v)])
                acc[static_cast<std::size_t>(net.edge_to_[static_cast<std::size_t>(ei)])] +=
                    wv * net.edges_[static_cast<std::size_t>(ei)].weight;
        }
        for (int j = 0; j < m; ++j)
            p(i, j) = acc[static_cast<std::size_t>(net.sink_idx_[static_cast<std::size_t>(j)])];
    }
    return p;
}

PlanarNetwork glue_power(const PlanarNetwork& net, int n) {
    net.ensure_valid();
    if (n < 0) throw std::invalid_argument("glue_power: negative power");
    const int m = net.boundary_size();

    if (n == 0) {
        std::vector<std::string> vs, boundary;
        for (int j = 1; j <= m; ++j) vs.push_back("b0_" + std::to_string(j));
        boundary = vs;
        return PlanarNetwork(vs, {}, boundary, boundary, net.name() + "^0");
    }

    // position of a vertex in the source/sink lists, or 0 if none
    std::unordered_map<std::string, int> src_pos, sink_pos;
    for (int j = 0; j < m; ++j) {
        src_pos[net.sources()[static_cast<std::size_t>(j)]] = j + 1;
        sink_pos[net.sinks()[static_cast<std::size_t>(j)]] = j + 1;
    }
    auto mapped = [&](int copy, const std::string& v) -> std::string {
        if (auto it = src_pos.find(v); it != src_pos.end() && copy > 1)
            return "b" + std::to_string(copy - 1) + "_" + std::to_string(it->second);
        if (auto it = sink_pos.find(v); it != sink_pos.end() && copy < n)
            return "b" + std::to_string(copy) + "_" + std::to_string(it->second);
        return "c" + std::to_string(copy) + "_" + v;
    };

    std::vector<std::string> vs;
    std::vector<EdgeSpec> es;
    std::set<std::string> seen;
    for (int copy = 1; copy <= n; ++copy) {
        for (const auto& v : net.vertices()) {
            std::string id = mapped(copy, v);
            if (seen.insert(id).second) vs.push_back(id);
        }
        for (const auto& e : net.edges())
            es.push_back({mapped(copy, e.from), mapped(copy, e.to), e.weight});
    }
    std::vector<std::string> sources, sinks;
    for (const auto& s : net.sources()) sources.push_back(mapped(1, s));
    for (const auto& t : net.sinks()) sinks.push_back(mapped(n, t));
    return PlanarNetwork(vs, es, sources, sinks,
                         net.name() + "^" + std::to_string(n));
}

std::vector<Path> enumerate_paths(const PlanarNetwork& net, const std::string& from,
                                  const std::string& to) {
    net.ensure_valid();
    const int src = net.vertex_index(from);
    const int dst = net.vertex_index(to);

    std::vector<Path> out;
    Path cur;
    cur.start = src;
    // depth-first over the deterministic adjacency
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == dst) out.push_back(cur);
        for (int ei : net.out_edges_[static_cast<std::size_t>(v)]) {
            cur.edges.push_back(ei);
            self(self, net.edge_to_[static_cast<std::size_t>(ei)]);
            cur.edges.pop_back();
        }
    };
    dfs(dfs, src);
    return out;
}

namespace {

constexpr long long kOracleTupleCap = 10'000'000;

// fixed-width bitset over vertex indices
struct VertexMask {
    std::vector<std::uint64_t> words;
    explicit VertexMask(std::size_t nbits) : words((nbits + 63) / 64, 0) {}
    void set(int b) { words[static_cast<std::size_t>(b) / 64] |= std::uint64_t(1) << (b % 64); }
    bool intersects(const VertexMask& o) const {
        for (std::size_t i = 0; i < words.size(); ++i)
            if (words[i] & o.words[i]) return true;
        return false;
    }
};

} // namespace

Rational oracle_nonintersecting_sum(const PlanarNetwork& net, const SubsetIndex& i,
                                    const SubsetIndex& j) {
    net.ensure_valid();
    if (i.size() != j.size())
        throw std::invalid_argument("oracle_nonintersecting_sum: |I| != |J|");
    if (i.ambient != net.boundary_size() || j.ambient != net.boundary_size())
        throw std::invalid_argument("oracle_nonintersecting_sum: subset ambient != boundary size");
    const int k = i.size();
    if (k == 0) return Rational(1);

    std::vector<std::vector<Path>> lists;
    lists.reserve(static_cast<std::size_t>(k));
    long long candidates = 1;
    for (int a = 0; a < k; ++a) {
        const std::string& s = net.sources()[static_cast<std::size_t>(i.elements[static_cast<std::size_t>(a)] - 1)];
        const std::string& t = net.sinks()[static_cast<std::size_t>(j.elements[static_cast<std::size_t>(a)] - 1)];
        lists.push_back(enumerate_paths(net, s, t));
        if (lists.back().empty()) return Rational(0);
        candidates *= static_cast<long long>(lists.back().size());
        if (candidates > kOracleTupleCap)
            throw CapacityError("oracle refuses instance with more than 10^7 candidate tuples");
    }

    // precompute weights and vertex masks
    std::vector<std::vector<Rational>> weights(static_cast<std::size_t>(k));
    std::vector<std::vector<VertexMask>> masks(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) {
        for (const Path& p : lists[static_cast<std::size_t>(a)]) {
            weights[static_cast<std::size_t>(a)].push_back(net.path_weight(p));
            VertexMask mask(net.vertices().size());
            for (int v : net.path_vertices(p)) mask.set(v);
            masks[static_cast<std::size_t>(a)].push_back(std::move(mask));
        }
    }

    // odometer over the Cartesian product, in index order (deterministic)
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    Rational total(0);
    while (true) {
        bool disjoint = true;
        for (int a = 0; a < k && disjoint; ++a)
            for (int b = a + 1; b < k && disjoint; ++b)
                if (masks[static_cast<std::size_t>(a)][pick[static_cast<std::size_t>(a)]].intersects(
                        masks[static_cast<std::size_t>(b)][pick[static_cast<std::size_t>(b)]]))
                    disjoint = false;
        if (disjoint) {
            Rational w(1);
            for (int a = 0; a < k; ++a)
                w *= weights[static_cast<std::size_t>(a)][pick[static_cast<std::size_t>(a)]];
            total += w;
        }
        int pos = k - 1;
        while (pos >= 0 && ++pick[static_cast<std::size_t>(pos)] ==
                               lists[static_cast<std::size_t>(pos)].size()) {
            pick[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return total;
}

} // namespace lgv
