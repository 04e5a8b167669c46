#ifndef SEMITD_GENERATORS_HPP
#define SEMITD_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "semitd/graph.hpp"

namespace semitd {

// Seeded generators for three strongly chordal families. Identical
// arguments produce byte-identical graphs (see rng.hpp for the generator
// spec), so corpora are reproducible across runs and machines.

enum class graph_family { tree, interval, block };

std::optional<graph_family> parse_family(std::string_view name);
std::string family_name(graph_family f);

/// Uniform random labeled tree (Pruefer decode). n >= 3; m = n - 1.
Graph random_tree(int n, std::uint64_t seed);

/// Random interval graph: n intervals with uniform left endpoints on
/// [0, 1) and lengths uniform on [0, 2*scale/n); vertices adjacent iff
/// intervals intersect. Coverage gaps are closed by extending the
/// interval with the furthest right endpoint, which keeps the graph an
/// interval graph and makes it connected. scale = 4 lands near m = 4n.
Graph random_interval_graph(int n, std::uint64_t seed, double scale = 4.0);

/// Random block graph: a tree of cliques with block sizes uniform in
/// [2, max_clique], each new block glued to a uniformly chosen existing
/// cut vertex. max_clique = 2 degenerates to a tree.
Graph random_block_graph(int n, std::uint64_t seed, int max_clique = 5);

struct GenSpec {
    graph_family family = graph_family::tree;
    int n = 3;
    std::uint64_t seed = 0;
    double scale = 4.0;   // interval family
    int max_clique = 5;   // block family
};

Graph generate(const GenSpec& spec);

} // namespace semitd

#endif
