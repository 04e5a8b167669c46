#include <benchmark/benchmark.h>

#include "semitd/generators.hpp"
#include "semitd/oracle.hpp"
#include "semitd/ordering.hpp"
#include "semitd/semitotal.hpp"

using namespace semitd;

namespace {

Graph instance(graph_family family, int n)
{
    GenSpec spec;
    spec.family = family;
    spec.n = n;
    spec.seed = 0xbe7c;
    return generate(spec);
}

void BM_solve_interval(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    Graph g = instance(graph_family::interval, n);
    SeoOrdering seo = find_seo(g);
    SolveOptions opts;
    opts.verify_ordering = false;
    for (auto _ : state) {
        auto result = solve(g, seo, opts);
        benchmark::DoNotOptimize(result.size);
    }
    state.SetComplexityN(g.vertex_count() + g.edge_count());
}
BENCHMARK(BM_solve_interval)->RangeMultiplier(2)->Range(1 << 13, 1 << 17)->Complexity(benchmark::oN);

void BM_solve_tree(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    Graph g = instance(graph_family::tree, n);
    SeoOrdering seo = find_seo(g);
    SolveOptions opts;
    opts.verify_ordering = false;
    for (auto _ : state) {
        auto result = solve(g, seo, opts);
        benchmark::DoNotOptimize(result.size);
    }
    state.SetComplexityN(g.vertex_count() + g.edge_count());
}
BENCHMARK(BM_solve_tree)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Complexity(benchmark::oN);

void BM_find_seo_interval(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    Graph g = instance(graph_family::interval, n);
    for (auto _ : state) {
        auto seo = find_seo(g);
        benchmark::DoNotOptimize(seo.order.data());
    }
}
BENCHMARK(BM_find_seo_interval)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);

void BM_verify_seo_interval(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    Graph g = instance(graph_family::interval, n);
    auto seo = find_seo(g);
    for (auto _ : state) {
        bool ok = verify_seo(g, seo.order);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_verify_seo_interval)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_oracle_gamma_t2(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    Graph g = instance(graph_family::interval, n);
    for (auto _ : state) {
        auto result = brute_force_gamma_t2(g);
        benchmark::DoNotOptimize(result.size);
    }
}
BENCHMARK(BM_oracle_gamma_t2)->DenseRange(10, 22, 4);

} // namespace

BENCHMARK_MAIN();
