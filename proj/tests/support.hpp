#ifndef SEMITD_TESTS_SUPPORT_HPP
#define SEMITD_TESTS_SUPPORT_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "semitd/graph.hpp"
#include "semitd/ordering.hpp"
#include "semitd/vertex_set.hpp"

namespace support {

using semitd::Graph;
using semitd::VertexSet;

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges)
{
    return Graph::from_edges(n, std::move(edges));
}

inline Graph path_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return make_graph(n, std::move(edges));
}

inline Graph cycle_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return make_graph(n, std::move(edges));
}

inline Graph complete_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return make_graph(n, std::move(edges));
}

// Vertex 0 is the center.
inline Graph star_graph(int leaves)
{
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return make_graph(leaves + 1, std::move(edges));
}

// Triangle 0,1,2 plus outer vertices 3~{0,1}, 4~{1,2}, 5~{2,0}; chordal
// but not strongly chordal.
inline Graph three_sun()
{
    return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}});
}

// Boolean distance-<=2 matrix, the matrix-squaring oracle for within_two
// and the semitotal partner rule.
inline std::vector<std::vector<bool>> reach_within_two(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            adj[v][u] = true;
    auto reach = adj;
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (adj[v][u])
                for (int w = 0; w < n; ++w)
                    if (adj[u][w] && w != v)
                        reach[v][w] = true;
    return reach;
}

// Independent checker built on the matrix oracle.
inline bool naive_is_semitotal(const Graph& g, const VertexSet& d)
{
    const int n = g.vertex_count();
    std::vector<bool> member(n, false), covered(n, false);
    for (int v : d) {
        member[v] = true;
        covered[v] = true;
        for (int u : g.neighbors(v))
            covered[u] = true;
    }
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
        return false;
    auto reach = reach_within_two(g);
    for (int v : d) {
        bool paired = false;
        for (int u = 0; u < n && !paired; ++u)
            if (u != v && member[u] && reach[v][u])
                paired = true;
        if (!paired)
            return false;
    }
    return true;
}

// Plain recursive enumeration over ids, independent of the bitmask oracle.
// Only for tiny n.
template <typename Pred>
inline int naive_smallest_subset(int n, int from_size, Pred&& pred)
{
    std::vector<int> chosen;
    auto search = [&](auto&& self, int next, int want) -> bool {
        if (want == 0)
            return pred(chosen);
        if (n - next < want)
            return false;
        for (int v = next; v < n; ++v) {
            chosen.push_back(v);
            if (self(self, v + 1, want - 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    for (int k = from_size; k <= n; ++k) {
        chosen.clear();
        if (search(search, 0, k))
            return k;
    }
    return -1;
}

inline int naive_gamma_t2(const Graph& g)
{
    return naive_smallest_subset(g.vertex_count(), 2, [&](const std::vector<int>& ids) {
        return naive_is_semitotal(g, VertexSet::from_unsorted(ids));
    });
}

// All-pairs definitional strong elimination check: for i <= j <= k with
// order[j], order[k] in N_i[order[i]], the restricted closed neighborhood
// of order[j] must be contained in order[k]'s. No transitivity shortcut.
inline bool definitional_seo_check(const Graph& g, const std::vector<int>& order)
{
    const int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p)
        pos[order[p]] = p;

    auto restricted = [&](int v, int i) {
        std::vector<int> out{pos[v]};
        for (int u : g.neighbors(v))
            if (pos[u] >= i)
                out.push_back(pos[u]);
        std::sort(out.begin(), out.end());
        return out;
    };

    for (int i = 0; i < n; ++i) {
        std::vector<int> members{i};
        for (int u : g.neighbors(order[i]))
            if (pos[u] > i)
                members.push_back(pos[u]);
        std::sort(members.begin(), members.end());
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a; b < members.size(); ++b) {
                auto lhs = restricted(order[members[a]], i);
                auto rhs = restricted(order[members[b]], i);
                if (!std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end()))
                    return false;
            }
        }
    }
    return true;
}

// Containment structure expected of a verified strong elimination ordering
// on a connected graph, checked with BFS-2 sets:
//   - along an edge to a later position, the restricted closed neighborhood
//     nests, and everything nests inside the highest neighbor's;
//   - the same holds for distance-two sets, both along edges and into the
//     highest neighbor (closed for distance one, closed-two for members);
//   - the highest neighbor of a non-final position is strictly later.
// Returns the number of violated containments (0 on a genuine ordering).
inline int count_structural_violations(const Graph& g, const semitd::SeoOrdering& seo)
{
    const int n = g.vertex_count();
    auto reach = reach_within_two(g);
    int bad = 0;

    auto fwd_closed = [&](int i, int v) {
        return semitd::forward_closed_neighborhood(g, seo, i, v);
    };
    auto fwd_two = [&](int i, int v) {
        std::vector<int> out{v};
        for (int u = 0; u < n; ++u)
            if (u != v && reach[v][u] && seo.pos[u] >= i)
                out.push_back(u);
        return VertexSet::from_unsorted(std::move(out));
    };
    auto subset = [](const VertexSet& a, const VertexSet& b) {
        return std::includes(b.ids().begin(), b.ids().end(), a.ids().begin(), a.ids().end());
    };

    for (int i = 0; i < n; ++i) {
        int vi = seo.order[i];
        int fj = seo.order[seo.f[i]];
        if (i < n - 1 && seo.f[i] <= i)
            ++bad;
        for (int u : g.neighbors(vi)) {
            if (seo.pos[u] <= i)
                continue;
            if (!subset(fwd_closed(i, vi), fwd_closed(i, u)))
                ++bad;
            if (!subset(fwd_closed(i, u), fwd_closed(i, fj)))
                ++bad;
            if (!subset(fwd_two(i, vi), fwd_two(i, u)))
                ++bad;
            int fu = seo.order[seo.f[seo.pos[u]]];
            if (!subset(fwd_two(i, vi), fwd_two(i, fu)))
                ++bad;
        }
        if (fj != vi) {
            if (!subset(fwd_two(i, vi), fwd_closed(i, fj)))
                ++bad;
            for (int u : g.neighbors(vi))
                if (seo.pos[u] >= i && !subset(fwd_two(i, u), fwd_two(i, fj)))
                    ++bad;
        }
    }
    return bad;
}

} // namespace support

#endif
