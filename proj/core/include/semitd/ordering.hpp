#ifndef SEMITD_ORDERING_HPP
#define SEMITD_ORDERING_HPP

#include <vector>

#include "semitd/graph.hpp"
#include "semitd/vertex_set.hpp"

namespace semitd {

// Positions are 0-based throughout. For a position p, the forward closed
// neighborhood at threshold i of the vertex v = order[p] is
//   {v} union {u in N(v) : pos[u] >= i}   (written N_i[v] below),
// i.e. the closed neighborhood restricted to vertices not yet eliminated
// at step i. An ordering is a strong elimination ordering (SEO) when for
// all i <= j <= k with order[j], order[k] both in N_i[order[i]],
// N_i[order[j]] is contained in N_i[order[k]].

/// A vertex ordering together with the derived structures the solver
/// consumes. Immutable after build().
struct SeoOrdering {
    std::vector<int> order;  // order[p] = vertex at position p
    std::vector<int> pos;    // pos[v]   = position of vertex v
    // f[p] = position of the highest-positioned neighbor of order[p];
    // f[n-1] = n-1 by convention. On a connected graph with a verified
    // ordering, f[p] > p for every p < n-1.
    std::vector<int> f;
    // Per-vertex adjacency re-sorted by position, ascending (CSR layout).
    std::vector<int> fwd_offsets;
    std::vector<int> fwd_targets;

    int size() const noexcept { return static_cast<int>(order.size()); }

    std::span<const int> forward_adjacency(int v) const
    {
        return {fwd_targets.data() + fwd_offsets[v],
                fwd_targets.data() + fwd_offsets[v + 1]};
    }

    /// Validates that `order` is a permutation of the vertices (throws
    /// not_a_permutation) and computes pos/f/forward adjacency. Does not
    /// verify the strong elimination property; see verify_seo.
    static SeoOrdering build(const Graph& g, std::vector<int> order);
};

/// Definitional SEO check (see above). Quadratic-ish in the forward
/// degrees; meant as source of truth, not for the solve path. Throws
/// not_a_permutation on malformed input.
bool verify_seo(const Graph& g, const std::vector<int>& order);

/// A vertex is simple when the closed neighborhoods of its closed
/// neighborhood form a chain under inclusion. Checked by sorting N[v] by
/// degree and testing containment between consecutive entries.
bool is_simple_vertex(const Graph& g, int v);

/// Computes a strong elimination ordering by repeatedly deleting a simple
/// vertex of the shrinking graph (lowest id among the eligible ones).
/// Each deletion freezes the inclusion chain over its closed neighborhood
/// as precedence constraints, and a vertex is eligible only once nothing
/// recorded must precede it; a completed elimination therefore satisfies
/// the strong property by construction. The result is still gated through
/// verify_seo. If the gate rejects and n <= 10, falls back to exhaustive
/// permutation search in lexicographic order. Throws not_strongly_chordal
/// when no eligible simple vertex remains or no permutation verifies.
SeoOrdering find_seo(const Graph& g);

/// Position of the highest-positioned neighbor of the vertex at position
/// p (pure lookup).
inline int f_of(const SeoOrdering& seo, int p) { return seo.f[p]; }

/// N_i[v] as a vertex set: {v} union {u in N(v) : pos[u] >= i}.
VertexSet forward_closed_neighborhood(const Graph& g, const SeoOrdering& seo, int i, int v);

/// Cursor view over the position-sorted adjacency. closed_forward_degree
/// must be called with a nondecreasing threshold per vertex; cursors only
/// move forward, so the total maintenance cost over a solver run is
/// O(n + m). Single-owner, one solver run at a time.
class ForwardView {
public:
    explicit ForwardView(const SeoOrdering& seo)
        : seo_(&seo), cursor_(seo.fwd_offsets.begin(), seo.fwd_offsets.end() - 1)
    {
    }

    /// |N_i[v]| = #(neighbors of v with position >= i) + 1 for v itself.
    /// Only meaningful while pos[v] >= i, which is the only way the solver
    /// queries it.
    int closed_forward_degree(int v, int i)
    {
        advance(v, i);
        return seo_->fwd_offsets[v + 1] - cursor_[v] + 1;
    }

    /// Neighbors of v with position >= i, sorted by position.
    std::span<const int> forward_neighbors(int v, int i)
    {
        advance(v, i);
        return {seo_->fwd_targets.data() + cursor_[v],
                seo_->fwd_targets.data() + seo_->fwd_offsets[v + 1]};
    }

private:
    void advance(int v, int i)
    {
        int c = cursor_[v];
        const int end = seo_->fwd_offsets[v + 1];
        while (c < end && seo_->pos[seo_->fwd_targets[c]] < i)
            ++c;
        cursor_[v] = c;
    }

    const SeoOrdering* seo_;
    std::vector<int> cursor_;
};

} // namespace semitd

#endif
