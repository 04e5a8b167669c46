#ifndef SEMITD_ORACLE_HPP
#define SEMITD_ORACLE_HPP

#include "semitd/graph.hpp"
#include "semitd/vertex_set.hpp"

namespace semitd {

// Exhaustive solvers for the three domination numbers on small graphs.
// Subsets are enumerated as bitmasks in increasing cardinality with early
// exit, so a returned witness is guaranteed minimum. Ground truth for the
// greedy solver's optimality tests; never on the solve path.

inline constexpr int oracle_max_vertices = 24;

struct BruteForceResult {
    int size = 0;
    VertexSet witness;
};

/// Minimum dominating set. Throws too_large for n > 24.
BruteForceResult brute_force_gamma(const Graph& g);

/// Minimum total dominating set (every member has a neighbor inside the
/// set). Throws too_large for n > 24, std::invalid_argument on isolated
/// vertices.
BruteForceResult brute_force_gamma_t(const Graph& g);

/// Minimum semitotal dominating set (every member has another member
/// within distance two). Same errors as brute_force_gamma_t.
BruteForceResult brute_force_gamma_t2(const Graph& g);

struct OracleReport {
    int gamma = 0;
    int gamma_t2 = 0;
    int gamma_t = 0;
    VertexSet gamma_witness;
    VertexSet gamma_t2_witness;
    VertexSet gamma_t_witness;
};

/// All three numbers with witnesses; checks gamma <= gamma_t2 <= gamma_t.
OracleReport oracle_report(const Graph& g);

} // namespace semitd

#endif
