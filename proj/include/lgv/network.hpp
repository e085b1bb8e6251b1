#ifndef LGV_NETWORK_HPP
#define LGV_NETWORK_HPP

#include "lgv/matrix.hpp"
#include "lgv/rational.hpp"
#include "lgv/subsets.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace lgv {

/// Thrown by brute-force enumerators when the instance exceeds the
/// desk-scale cut-off (10^7 candidate tuples).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when an operation requires a valid network but the validation
/// report carries violations.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Violation {
    enum class Kind {
        duplicate_vertex,
        unknown_vertex,
        boundary_count_mismatch,
        source_indegree,
        sink_outdegree,
        boundary_overlap,
        cycle,
    };
    Kind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

struct EdgeSpec {
    std::string from;
    std::string to;
    Rational weight;
};

/// Directed path stored as a list of edge indices; a length-0 path is an
/// empty edge list anchored at a single vertex.
struct Path {
    int start = -1;            // vertex index
    std::vector<int> edges;    // edge indices, head to tail
};

struct PathTuple {
    std::vector<Path> paths;
    bool non_intersecting = false; // pairwise vertex-disjoint when set
};

/// Weighted acyclic network with ordered boundary sources and sinks.
/// The clockwise boundary order s_1..s_m, t_m..t_1 is declared by the
/// caller and trusted; it is not derived from an embedding. Construction
/// never throws on semantic problems: they are collected in the
/// validation report, and operations that need a valid network refuse to
/// run until the report is clean. Parallel edges are allowed.
///
/// The one sanctioned exception to source/sink disjointness is the
/// degenerate glued power G^0, where s_j and t_j name the same isolated
/// vertex.
class PlanarNetwork {
public:
    PlanarNetwork(std::vector<std::string> vertices, std::vector<EdgeSpec> edges,
                  std::vector<std::string> sources, std::vector<std::string> sinks,
                  std::string name = "");

    const std::string& name() const { return name_; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<EdgeSpec>& edges() const { return edges_; }
    const std::vector<std::string>& sources() const { return sources_; }
    const std::vector<std::string>& sinks() const { return sinks_; }
    int boundary_size() const { return static_cast<int>(sources_.size()); }

    const ValidationReport& validation() const { return report_; }
    bool is_valid() const { return report_.ok(); }
    void ensure_valid() const {
        if (!report_.ok()) throw ValidationError("invalid network: " + report_.summary());
    }

    int vertex_index(const std::string& id) const;

    /// Vertices in topological order, ties broken by id (lexicographic).
    const std::vector<int>& topological_order() const;

    Rational path_weight(const Path& p) const;
    std::vector<int> path_vertices(const Path& p) const;

private:
    friend Matrix path_matrix(const PlanarNetwork&);
    friend std::vector<Path> enumerate_paths(const PlanarNetwork&, const std::string&,
                                             const std::string&);
    friend Rational oracle_nonintersecting_sum(const PlanarNetwork&, const SubsetIndex&,
                                               const SubsetIndex&);

    std::vector<std::string> vertices_;
    std::vector<EdgeSpec> edges_;
    std::vector<std::string> sources_;
    std::vector<std::string> sinks_;
    std::string name_;

    ValidationReport report_;
    std::unordered_map<std::string, int> index_;
    std::vector<int> edge_from_, edge_to_;      // resolved endpoints
    std::vector<std::vector<int>> out_edges_;   // per vertex, deterministic order
    std::vector<int> source_idx_, sink_idx_;
    std::vector<int> topo_;
};

/// Re-runs nothing: the report is computed at construction.
inline const ValidationReport& validate(const PlanarNetwork& net) { return net.validation(); }

/// m x m matrix of weighted path sums source i -> sink j, by dynamic
/// programming over the topological order.
Matrix path_matrix(const PlanarNetwork& net);

/// The glued power G^n: n copies of G with copy i's sinks identified
/// with copy i+1's sources. G^0 is the degenerate network of m isolated
/// vertices each serving as both s_j and t_j. Vertex names are canonical:
/// the boundary vertex between copies i and i+1 is "b{i}_{j}", every
/// other vertex of copy i is "c{i}_{v}".
PlanarNetwork glue_power(const PlanarNetwork& net, int n);

/// Every directed path between the two vertices, in depth-first order
/// (out-edges ordered by target id, then insertion); from == to yields
/// the single length-0 path.
std::vector<Path> enumerate_paths(const PlanarNetwork& net, const std::string& from,
                                  const std::string& to);

/// Brute-force weighted count of non-intersecting path tuples
/// (s_{I_1},...,s_{I_k}) -> (t_{J_1},...,t_{J_k}): Cartesian product of
/// per-pair path lists, filtered to pairwise vertex-disjoint tuples.
/// Refuses instances with more than 10^7 candidate tuples.
Rational oracle_nonintersecting_sum(const PlanarNetwork& net, const SubsetIndex& i,
                                    const SubsetIndex& j);

} // namespace lgv

#endif // LGV_NETWORK_HPP
