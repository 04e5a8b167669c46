#include "semitd/bench.hpp"

#include <chrono>
#include <ostream>

#include "semitd/ordering.hpp"
#include "semitd/semitotal.hpp"

namespace semitd {

namespace {

using clock = std::chrono::steady_clock;

double ms_since(clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(clock::now() - start).count();
}

} // namespace

BenchRow run_bench_row(graph_family family, int n, std::uint64_t seed, int reps)
{
    GenSpec spec;
    spec.family = family;
    spec.n = n;
    spec.seed = seed;
    Graph g = generate(spec);

    BenchRow row;
    row.n = g.vertex_count();
    row.m = g.edge_count();
    row.family = family;
    row.seed = seed;

    auto t0 = clock::now();
    SeoOrdering seo = find_seo(g);
    row.seo_ms = ms_since(t0);

    SolveOptions opts;
    opts.verify_ordering = false;  // find_seo already gated it
    double best = -1.0;
    for (int r = 0; r < (reps < 1 ? 1 : reps); ++r) {
        auto t1 = clock::now();
        SemiTdResult result = solve(g, seo, opts);
        double ms = ms_since(t1);
        row.result_size = result.size;
        if (best < 0 || ms < best)
            best = ms;
    }
    row.solve_ms = best;
    return row;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out)
{
    out << bench_csv_header << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << r.m << ',' << family_name(r.family) << ',' << r.seed << ','
            << r.seo_ms << ',' << r.solve_ms << ',' << r.result_size << '\n';
    }
}

} // namespace semitd
