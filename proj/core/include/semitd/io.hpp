#ifndef SEMITD_IO_HPP
#define SEMITD_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "semitd/graph.hpp"
#include "semitd/vertex_set.hpp"

namespace semitd {

// All file formats use 1-based vertex ids; ids are shifted to 0-based at
// the parser boundary. Lines starting with '#' and blank lines are ignored.

/// Plain edge list: header "n m", then m lines "u v".
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// DIMACS-like variant: "p edge n m" header, then "e u v" lines.
/// "c" lines are comments.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(std::string_view text);

/// Sniffs the format (DIMACS if the first significant line starts with
/// 'p' or 'c' or 'e') and delegates.
Graph parse_graph_auto(std::istream& in);
Graph parse_graph_auto(std::string_view text);
Graph load_graph(const std::string& path);

/// Header "n m" plus one "u v" line per edge with u < v, ascending.
/// parse_edge_list(write_edge_list(g)) reproduces g exactly.
void write_edge_list(const Graph& g, std::ostream& out);
std::string format_edge_list(const Graph& g);

/// One line of space-separated 1-based ids.
VertexSet parse_vertex_set_line(std::string_view line, int n);
std::string format_vertex_set(const VertexSet& s);

/// One line of n space-separated 1-based ids in position order.
std::vector<int> parse_ordering_line(std::string_view line, int n);
std::string format_ordering(const std::vector<int>& order);

} // namespace semitd

#endif
