// Acceptance suite: one pass/fail line per criterion on stdout. Built on
// the seeded generators, the exhaustive oracle, and the definitional
// ordering checks, so every expected value is recomputed here.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <vector>

#include "semitd/bench.hpp"
#include "semitd/errors.hpp"
#include "semitd/generators.hpp"
#include "semitd/graph.hpp"
#include "semitd/io.hpp"
#include "semitd/oracle.hpp"
#include "semitd/ordering.hpp"
#include "semitd/rng.hpp"
#include "semitd/semitotal.hpp"

#include "support.hpp"

using namespace semitd;

namespace {

void report(int criterion, bool ok, const std::string& detail)
{
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
}

struct Corpus {
    graph_family family;
    int lo, hi;
    std::uint64_t seed_base;
};

constexpr Corpus corpora[] = {
    {graph_family::tree, 3, 16, 0x1000000},
    {graph_family::interval, 4, 16, 0x2000000},
    {graph_family::block, 4, 16, 0x3000000},
};

GenSpec corpus_spec(const Corpus& c, int idx)
{
    GenSpec spec;
    spec.family = c.family;
    spec.seed = c.seed_base + static_cast<std::uint64_t>(idx);
    SplitMix64 rng(spec.seed * 2654435761u);
    spec.n = c.lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(c.hi - c.lo + 1)));
    return spec;
}

constexpr int corpus_size = 500;

} // namespace

// Criteria 1, 3, 4: optimality against the oracle, the sandwich
// inequality, and runtime invariant checks over the same corpus.
TEST_CASE("optimality, sandwich, invariants")
{
    using clock = std::chrono::steady_clock;
    auto start = clock::now();

    int total = 0, optimal = 0, sandwich_ok = 0, invariant_clean = 0;
    SolveOptions opts;
    opts.verify_ordering = false;  // find_seo gates internally
    opts.checks = true;

    for (const auto& corpus : corpora) {
        for (int idx = 0; idx < corpus_size; ++idx) {
            GenSpec spec = corpus_spec(corpus, idx);
            Graph g = generate(spec);
            ++total;

            bool fired = false;
            SemiTdResult result;
            try {
                auto seo = find_seo(g);
                result = solve(g, seo, opts);
            } catch (const invariant_violation&) {
                fired = true;
            }
            if (fired)
                continue;
            invariant_clean += 1;

            auto report_ = oracle_report(g);
            if (result.size == report_.gamma_t2)
                ++optimal;
            if (report_.gamma <= result.size && result.size <= report_.gamma_t)
                ++sandwich_ok;
        }
    }

    double secs = std::chrono::duration<double>(clock::now() - start).count();
    bool c1 = optimal == total && secs < 300.0;
    bool c3 = sandwich_ok == total;
    bool c4 = invariant_clean == total;
    report(1, c1,
           "solve == gamma_t2 on " + std::to_string(optimal) + "/" + std::to_string(total)
               + " generated instances in " + std::to_string(secs) + "s");
    report(3, c3,
           "gamma <= solve <= gamma_t on " + std::to_string(sandwich_ok) + "/"
               + std::to_string(total) + " instances");
    report(4, c4,
           "runtime invariant checks fired on " + std::to_string(total - invariant_clean)
               + " of " + std::to_string(total) + " checked runs");
    CHECK(c1);
    CHECK(c3);
    CHECK(c4);
}

// Criterion 2: solutions stay valid far beyond oracle reach.
TEST_CASE("validity at scale")
{
    SolveOptions opts;
    opts.verify_ordering = false;

    int total = 0, valid = 0;
    auto run_one = [&](graph_family family, int n, std::uint64_t seed) {
        GenSpec spec;
        spec.family = family;
        spec.n = n;
        spec.seed = seed;
        Graph g = generate(spec);
        auto seo = find_seo(g);
        auto result = solve(g, seo, opts);
        ++total;
        if (result.size >= 2 && is_semitotal_dominating(g, result.set))
            ++valid;
    };

    SplitMix64 sizes(0xace0fba5e);
    for (int idx = 0; idx < 994; ++idx) {
        auto family = static_cast<graph_family>(idx % 3);
        int n = 17 + static_cast<int>(sizes.below(2984));  // [17, 3000]
        run_one(family, n, 0x4000000 + idx);
    }
    run_one(graph_family::interval, 10000, 1);
    run_one(graph_family::block, 20000, 2);
    run_one(graph_family::tree, 50000, 3);
    run_one(graph_family::interval, 50000, 4);
    run_one(graph_family::tree, 100000, 5);
    run_one(graph_family::interval, 100000, 6);

    bool ok = total == 1000 && valid == total;
    report(2, ok,
           "semitotal validity on " + std::to_string(valid) + "/" + std::to_string(total)
               + " instances up to n=100000");
    CHECK(ok);
}

// Criterion 5: the ordering machinery accepts what it builds and rejects
// what the definitional check rejects.
TEST_CASE("ordering machinery")
{
    int accepted = 0, instances = 0;
    for (const auto& corpus : corpora) {
        for (int idx = 0; idx < corpus_size; ++idx) {
            Graph g = generate(corpus_spec(corpus, idx));
            ++instances;
            if (verify_seo(g, find_seo(g).order))
                ++accepted;
        }
    }

    // 100 random non-orderings per family, each rejection cross-checked
    // against the all-pairs definitional test.
    int rejected = 0, agreed = 0, wanted = 0;
    for (const auto& corpus : corpora) {
        SplitMix64 rng(corpus.seed_base ^ 0x5eed);
        int found = 0;
        for (int round = 0; found < 100 && round < 5000; ++round) {
            Graph g = generate(corpus_spec(corpus, round % corpus_size));
            std::vector<int> perm(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v)
                perm[v] = v;
            for (int v = g.vertex_count() - 1; v > 0; --v)
                std::swap(perm[v], perm[rng.below(static_cast<std::uint64_t>(v) + 1)]);
            if (support::definitional_seo_check(g, perm))
                continue;  // the shuffle happened to be a valid ordering
            ++found;
            ++rejected;
            if (!verify_seo(g, perm))
                ++agreed;
        }
        wanted += 100;
    }

    bool gates = true;
    try {
        find_seo(support::cycle_graph(4));
        gates = false;
    } catch (const not_strongly_chordal&) {
    }
    try {
        find_seo(support::three_sun());
        gates = false;
    } catch (const not_strongly_chordal&) {
    }

    bool ok = accepted == instances && rejected == wanted && agreed == rejected && gates;
    report(5, ok,
           "verify accepted " + std::to_string(accepted) + "/" + std::to_string(instances)
               + " found orderings; rejected " + std::to_string(agreed) + "/"
               + std::to_string(wanted) + " non-orderings; C4 and 3-sun rejected: "
               + (gates ? "yes" : "no"));
    CHECK(ok);
}

// Criterion 6: structural containments hold on verified orderings.
TEST_CASE("structural containments")
{
    int violations = 0, instances = 0;
    for (int idx = 0; idx < 100; ++idx) {
        GenSpec spec;
        spec.family = static_cast<graph_family>(idx % 3);
        SplitMix64 rng(0x600 + idx);
        spec.n = 5 + static_cast<int>(rng.below(56));
        spec.seed = 0x5000000 + idx;
        Graph g = generate(spec);
        auto seo = find_seo(g);
        ++instances;
        violations += support::count_structural_violations(g, seo);
    }
    bool ok = violations == 0 && instances == 100;
    report(6, ok,
           std::to_string(violations) + " containment violations across "
               + std::to_string(instances) + " verified orderings");
    CHECK(ok);
}

// Criterion 7: the solve stays linear at desk scale.
TEST_CASE("linear scaling")
{
    std::vector<int> ladder{10000, 20000, 40000, 80000, 160000};
    std::vector<BenchRow> rows;
    for (int n : ladder)
        rows.push_back(run_bench_row(graph_family::interval, n, 0x77, 5));

    bool density_ok = true;
    for (const auto& r : rows) {
        double ratio = static_cast<double>(r.m) / r.n;
        if (ratio < 2.5 || ratio > 5.5)
            density_ok = false;
    }

    double worst_ratio = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        worst_ratio = std::max(worst_ratio, rows[i].solve_ms / rows[i - 1].solve_ms);
    double top_ms = rows.back().solve_ms;

    bool ok = density_ok && worst_ratio <= 2.5 && top_ms < 2000.0;
    std::string detail = "solve_ms:";
    for (const auto& r : rows)
        detail += " " + std::to_string(r.solve_ms);
    detail += "; worst doubling ratio " + std::to_string(worst_ratio) + "; n=160k in "
              + std::to_string(top_ms) + "ms";
    report(7, ok, detail);
    CHECK(ok);
}

// Criterion 8: hand fixtures against oracle values recomputed here.
TEST_CASE("hand fixtures")
{
    struct Fixture {
        const char* name;
        Graph g;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({"p3", support::path_graph(3)});
    fixtures.push_back({"k1_3", support::star_graph(3)});
    fixtures.push_back({"p6", support::path_graph(6)});
    fixtures.push_back({"k3", support::complete_graph(3)});
    const int expected[] = {2, 2, 3, 2};

    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        auto seo = find_seo(fixtures[i].g);
        auto result = solve_with_trace(fixtures[i].g, seo);
        int oracle = brute_force_gamma_t2(fixtures[i].g).size;
        bool good = result.size == expected[i] && result.size == oracle
                    && is_semitotal_dominating(fixtures[i].g, result.set)
                    && static_cast<int>(result.trace.size()) == fixtures[i].g.vertex_count();
        ok = ok && good;
        if (!detail.empty())
            detail += ", ";
        detail += std::string(fixtures[i].name) + "=" + std::to_string(result.size);
    }
    report(8, ok, detail + " (all equal to recomputed oracle values)");
    CHECK(ok);
}
