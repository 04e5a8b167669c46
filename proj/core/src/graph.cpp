#include "semitd/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "semitd/errors.hpp"

namespace semitd {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges)
{
    if (n < 0)
        throw parse_error(parse_errc::malformed_header, 0, "negative vertex count");

    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(parse_errc::vertex_out_of_range, 0,
                              "edge endpoint outside [1, " + std::to_string(n) + "]");
        if (u == v)
            throw parse_error(parse_errc::self_loop, 0,
                              "self loop at vertex " + std::to_string(u + 1));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw parse_error(parse_errc::duplicate_edge, 0, "duplicate edge");

    Graph g;
    g.n_ = n;
    g.m_ = static_cast<int>(edges.size());
    g.offsets_.assign(n + 1, 0);
    for (auto [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (int v = 0; v < n; ++v)
        g.offsets_[v + 1] += g.offsets_[v];
    g.targets_.resize(2 * static_cast<std::size_t>(g.m_));
    std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.targets_[fill[u]++] = v;
        g.targets_[fill[v]++] = u;
    }
    // Sorted edge input plus two-pass fill leaves each list strictly
    // increasing already; keep the sort as a cheap structural guarantee.
    for (int v = 0; v < n; ++v)
        std::sort(g.targets_.begin() + g.offsets_[v], g.targets_.begin() + g.offsets_[v + 1]);
    return g;
}

bool Graph::adjacent(int u, int v) const
{
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::has_isolated_vertex() const
{
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 0)
            return true;
    return false;
}

bool is_connected(const Graph& g)
{
    const int n = g.vertex_count();
    if (n <= 1)
        return true;
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<int> queue;
    queue.reserve(n);
    queue.push_back(0);
    seen[0] = 1;
    int reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int u : g.neighbors(queue[head])) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                queue.push_back(u);
            }
        }
    }
    return reached == n;
}

VertexSet within_two(const Graph& g, int v)
{
    std::vector<std::uint8_t> seen(g.vertex_count(), 0);
    seen[v] = 1;
    std::vector<int> out;
    for (int u : g.neighbors(v)) {
        if (!seen[u]) {
            seen[u] = 1;
            out.push_back(u);
        }
    }
    for (int u : g.neighbors(v)) {
        for (int w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                out.push_back(w);
            }
        }
    }
    return VertexSet::from_unsorted(std::move(out));
}

bool is_dominating(const Graph& g, const VertexSet& d)
{
    const int n = g.vertex_count();
    std::vector<std::uint8_t> covered(n, 0);
    for (int v : d) {
        covered[v] = 1;
        for (int u : g.neighbors(v))
            covered[u] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!covered[v])
            return false;
    return true;
}

SemitotalCheck check_semitotal_dominating(const Graph& g, const VertexSet& d)
{
    const int n = g.vertex_count();
    if (g.has_isolated_vertex())
        return {semitotal_status::undefined, -1};

    std::vector<std::uint8_t> member(n, 0);
    std::vector<std::uint8_t> covered(n, 0);
    for (int v : d) {
        member[v] = 1;
        covered[v] = 1;
        for (int u : g.neighbors(v))
            covered[u] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!covered[v])
            return {semitotal_status::not_dominating, v};

    // Partner rule: a depth-2 scan from each member must hit another member.
    for (int v : d) {
        bool paired = false;
        for (int u : g.neighbors(v)) {
            if (member[u]) {
                paired = true;
                break;
            }
        }
        if (!paired) {
            for (int u : g.neighbors(v)) {
                for (int w : g.neighbors(u)) {
                    if (w != v && member[w]) {
                        paired = true;
                        break;
                    }
                }
                if (paired)
                    break;
            }
        }
        if (!paired)
            return {semitotal_status::unpaired_member, v};
    }
    return {};
}

bool is_semitotal_dominating(const Graph& g, const VertexSet& d)
{
    auto check = check_semitotal_dominating(g, d);
    if (check.status == semitotal_status::undefined)
        throw std::invalid_argument("semitotal domination is undefined on graphs with isolated vertices");
    return check.ok();
}

} // namespace semitd
