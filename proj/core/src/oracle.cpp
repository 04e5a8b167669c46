#include "semitd/oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "semitd/errors.hpp"

namespace semitd {

namespace {

using mask = std::uint32_t;

std::vector<int> mask_to_ids(mask s)
{
    std::vector<int> ids;
    while (s) {
        int v = std::countr_zero(s);
        ids.push_back(v);
        s &= s - 1;
    }
    return ids;
}

struct Masks {
    int n;
    mask full;
    std::vector<mask> closed;  // v and its neighbors
    std::vector<mask> open;    // neighbors only
    std::vector<mask> near2;   // vertices != v within distance two

    explicit Masks(const Graph& g) : n(g.vertex_count())
    {
        if (n > oracle_max_vertices)
            throw too_large("oracle handles at most " + std::to_string(oracle_max_vertices)
                            + " vertices, got " + std::to_string(n));
        full = (mask{1} << n) - 1;
        closed.assign(n, 0);
        open.assign(n, 0);
        near2.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            for (int u : g.neighbors(v))
                open[v] |= mask{1} << u;
            closed[v] = open[v] | (mask{1} << v);
        }
        for (int v = 0; v < n; ++v) {
            mask reach = closed[v];
            for (int u : g.neighbors(v))
                reach |= closed[u];
            near2[v] = reach & ~(mask{1} << v);
        }
    }
};

// Smallest feasible subset, scanning cardinalities upward; within one
// cardinality, subsets are visited in increasing numeric value, so the
// witness is deterministic.
template <typename Feasible>
BruteForceResult smallest_subset(const Masks& mk, int min_size, Feasible&& feasible)
{
    for (int k = min_size; k <= mk.n; ++k) {
        mask s = (mask{1} << k) - 1;
        while (s <= mk.full) {
            if (feasible(s))
                return {k, VertexSet::from_unsorted(mask_to_ids(s))};
            // Gosper's hack: next k-bit subset in increasing value.
            mask c = s & (~s + 1);
            mask r = s + c;
            if (r > mk.full)
                break;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    throw std::logic_error("no feasible subset at any cardinality");
}

bool dominates(const Masks& mk, mask s)
{
    mask covered = 0;
    mask rest = s;
    while (rest) {
        int v = std::countr_zero(rest);
        covered |= mk.closed[v];
        rest &= rest - 1;
    }
    return covered == mk.full;
}

void require_no_isolated(const Graph& g)
{
    if (g.has_isolated_vertex())
        throw std::invalid_argument("graph has an isolated vertex");
}

} // namespace

BruteForceResult brute_force_gamma(const Graph& g)
{
    Masks mk(g);
    if (mk.n == 0)
        return {0, {}};
    return smallest_subset(mk, 1, [&](mask s) { return dominates(mk, s); });
}

BruteForceResult brute_force_gamma_t(const Graph& g)
{
    require_no_isolated(g);
    Masks mk(g);
    return smallest_subset(mk, 2, [&](mask s) {
        if (!dominates(mk, s))
            return false;
        for (mask rest = s; rest; rest &= rest - 1)
            if ((mk.open[std::countr_zero(rest)] & s) == 0)
                return false;
        return true;
    });
}

BruteForceResult brute_force_gamma_t2(const Graph& g)
{
    require_no_isolated(g);
    Masks mk(g);
    return smallest_subset(mk, 2, [&](mask s) {
        if (!dominates(mk, s))
            return false;
        for (mask rest = s; rest; rest &= rest - 1)
            if ((mk.near2[std::countr_zero(rest)] & s) == 0)
                return false;
        return true;
    });
}

OracleReport oracle_report(const Graph& g)
{
    auto gamma = brute_force_gamma(g);
    auto gamma_t2 = brute_force_gamma_t2(g);
    auto gamma_t = brute_force_gamma_t(g);
    if (!(gamma.size <= gamma_t2.size && gamma_t2.size <= gamma_t.size))
        throw std::logic_error("domination numbers out of order");
    OracleReport r;
    r.gamma = gamma.size;
    r.gamma_t2 = gamma_t2.size;
    r.gamma_t = gamma_t.size;
    r.gamma_witness = std::move(gamma.witness);
    r.gamma_t2_witness = std::move(gamma_t2.witness);
    r.gamma_t_witness = std::move(gamma_t.witness);
    return r;
}

} // namespace semitd
