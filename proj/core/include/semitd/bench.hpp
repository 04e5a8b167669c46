#ifndef SEMITD_BENCH_HPP
#define SEMITD_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "semitd/generators.hpp"

namespace semitd {

/// One scaling measurement. Ordering construction and the solve proper are
/// timed separately: the linear-time bound applies to solving with the
/// ordering already in hand.
struct BenchRow {
    int n = 0;
    int m = 0;
    graph_family family = graph_family::interval;
    std::uint64_t seed = 0;
    double seo_ms = 0.0;    // find_seo wall time
    double solve_ms = 0.0;  // best solve wall time over `reps` repeats
    int result_size = 0;
};

/// Generates the instance, finds its ordering, and times `reps` solves,
/// keeping the fastest. Deterministic result for fixed (family, n, seed).
BenchRow run_bench_row(graph_family family, int n, std::uint64_t seed, int reps = 3);

inline constexpr const char* bench_csv_header = "n,m,family,seed,seo_ms,solve_ms,size";

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

} // namespace semitd

#endif
