#include "semitd/generators.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "semitd/rng.hpp"

namespace semitd {

namespace {

void require_n(int n)
{
    if (n < 3)
        throw std::invalid_argument("generators need n >= 3, got " + std::to_string(n));
}

} // namespace

std::optional<graph_family> parse_family(std::string_view name)
{
    if (name == "tree")
        return graph_family::tree;
    if (name == "interval")
        return graph_family::interval;
    if (name == "block")
        return graph_family::block;
    return std::nullopt;
}

std::string family_name(graph_family f)
{
    switch (f) {
    case graph_family::tree: return "tree";
    case graph_family::interval: return "interval";
    case graph_family::block: return "block";
    }
    return "?";
}

Graph random_tree(int n, std::uint64_t seed)
{
    require_n(n);
    SplitMix64 rng(seed);

    // Pruefer decode with a min-heap of current leaves.
    std::vector<int> code(n - 2);
    for (int& x : code)
        x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));

    std::vector<int> degree(n, 1);
    for (int x : code)
        ++degree[x];

    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.push(v);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int x : code) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1)
            leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(a, b);
    return Graph::from_edges(n, std::move(edges));
}

Graph random_interval_graph(int n, std::uint64_t seed, double scale)
{
    require_n(n);
    if (scale <= 0)
        throw std::invalid_argument("interval scale must be positive");
    SplitMix64 rng(seed);

    std::vector<double> left(n), right(n);
    const double max_len = 2.0 * scale / n;
    for (int v = 0; v < n; ++v) {
        left[v] = rng.unit();
        right[v] = left[v] + rng.unit() * max_len;
    }

    std::vector<int> by_left(n);
    std::iota(by_left.begin(), by_left.end(), 0);
    std::sort(by_left.begin(), by_left.end(), [&](int a, int b) {
        return left[a] != left[b] ? left[a] < left[b] : a < b;
    });

    // Close coverage gaps: whenever no interval reaches the next left
    // endpoint, stretch the one that got furthest. The representation
    // stays a set of intervals, so the family is preserved, and the
    // result is connected by construction.
    int furthest = by_left[0];
    for (int t = 1; t < n; ++t) {
        int v = by_left[t];
        if (right[furthest] < left[v])
            right[furthest] = left[v];
        if (right[v] > right[furthest])
            furthest = v;
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(scale) * n + n);
    for (int t = 0; t < n; ++t) {
        int v = by_left[t];
        for (int u = t + 1; u < n && left[by_left[u]] <= right[v]; ++u)
            edges.emplace_back(v, by_left[u]);
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph random_block_graph(int n, std::uint64_t seed, int max_clique)
{
    require_n(n);
    if (max_clique < 2)
        throw std::invalid_argument("max_clique must be at least 2");
    SplitMix64 rng(seed);

    std::vector<std::pair<int, int>> edges;
    auto add_clique = [&](int cut, int first_new, int new_count) {
        for (int a = first_new; a < first_new + new_count; ++a) {
            edges.emplace_back(cut, a);
            for (int b = a + 1; b < first_new + new_count; ++b)
                edges.emplace_back(a, b);
        }
    };

    int made = 1;  // vertex 0 seeds the first block
    while (made < n) {
        int cut = static_cast<int>(rng.below(static_cast<std::uint64_t>(made)));
        int block = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_clique - 1)));
        int grow = std::min(block - 1, n - made);
        add_clique(cut, made, grow);
        made += grow;
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph generate(const GenSpec& spec)
{
    switch (spec.family) {
    case graph_family::tree: return random_tree(spec.n, spec.seed);
    case graph_family::interval: return random_interval_graph(spec.n, spec.seed, spec.scale);
    case graph_family::block: return random_block_graph(spec.n, spec.seed, spec.max_clique);
    }
    throw std::invalid_argument("unknown graph family");
}

} // namespace semitd
