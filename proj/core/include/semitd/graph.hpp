#ifndef SEMITD_GRAPH_HPP
#define SEMITD_GRAPH_HPP

#include <span>
#include <utility>
#include <vector>

#include "semitd/vertex_set.hpp"

namespace semitd {

/// Undirected simple graph in compressed adjacency form. Vertices are the
/// ids 0..n-1; each adjacency list is strictly increasing and symmetric
/// (u appears in adj(v) exactly when v appears in adj(u)). Immutable after
/// construction, so instances can be shared freely across threads.
class Graph {
public:
    Graph() = default;

    /// Build from an edge list on vertices 0..n-1. Rejects self loops,
    /// duplicate edges (in either orientation) and out-of-range endpoints
    /// by throwing parse_error.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }

    std::span<const int> neighbors(int v) const
    {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

    bool adjacent(int u, int v) const;

    bool has_isolated_vertex() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<int> offsets_;
    std::vector<int> targets_;
};

/// True iff a single BFS from vertex 0 reaches every vertex. The empty
/// graph counts as connected.
bool is_connected(const Graph& g);

/// All vertices u != v with d(u, v) <= 2, via a depth-2 BFS from v.
VertexSet within_two(const Graph& g, int v);

/// True iff every vertex outside d has a neighbor in d.
bool is_dominating(const Graph& g, const VertexSet& d);

enum class semitotal_status {
    valid,
    not_dominating,   // some vertex outside d has no neighbor in d
    unpaired_member,  // some member of d has no other member within distance 2
    undefined,        // graph has an isolated vertex: instance, not solution, is bad
};

struct SemitotalCheck {
    semitotal_status status = semitotal_status::valid;
    int witness = -1;  // offending vertex for the two failure modes

    bool ok() const noexcept { return status == semitotal_status::valid; }
};

/// Checks the two semitotal conditions: d dominates g, and every member of
/// d has another member at distance at most two (depth-2 BFS per member).
/// A graph with an isolated vertex yields status::undefined rather than a
/// verdict on d.
SemitotalCheck check_semitotal_dominating(const Graph& g, const VertexSet& d);

/// Convenience wrapper; throws std::invalid_argument on an undefined
/// instance (isolated vertices).
bool is_semitotal_dominating(const Graph& g, const VertexSet& d);

} // namespace semitd

#endif
