#include "semitd/semitotal.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "semitd/errors.hpp"

namespace semitd {

namespace detail {

SolverState::SolverState(const Graph& graph, const SeoOrdering& ordering)
    : g(&graph),
      seo(&ordering),
      fwd(ordering),
      dominated(graph.vertex_count(), 0),
      label(graph.vertex_count(), 0),
      has_dom_nbr(graph.vertex_count(), 0),
      mark(graph.vertex_count(), -1)
{
}

void SolverState::fail(const char* msg) const
{
    throw invariant_violation(msg);
}

void SolverState::dominate_closed(int x)
{
    auto newly = [&](int u) {
        dominated[u] = 1;
        has_dom_nbr[u] = 1;
        for (int w : g->neighbors(u))
            has_dom_nbr[w] = 1;
    };
    if (!dominated[x])
        newly(x);
    for (int u : g->neighbors(x))
        if (!dominated[u])
            newly(u);
}

int SolverState::mark_closed(int j, int i)
{
    int written = 0;
    auto stamp = [&](int u) {
        if (seo->pos[u] > i) {
            // Pending vertices never have overlapping closed neighborhoods,
            // so a live stamp is never overwritten.
            if (checks && mark[u] != -1 && label[mark[u]] == 1)
                fail("mark overwrite would drop a live pairing obligation");
            mark[u] = j;
            ++written;
        }
    };
    stamp(j);
    for (int u : g->neighbors(j))
        stamp(u);
    return written;
}

int SolverState::unmark_closed(int s)
{
    int cleared = 0;
    auto wipe = [&](int u) {
        if (mark[u] != -1) {
            if (checks && mark[u] != s)
                fail("unmark touched a stamp belonging to another pending vertex");
            mark[u] = -1;
            ++cleared;
        }
    };
    wipe(s);
    for (int u : g->neighbors(s))
        wipe(u);
    return cleared;
}

int SolverState::best_paired_candidate(int i, int* count)
{
    const int vi = seo->order[i];
    const int fp = seo->f[i];
    const int target = fwd.closed_forward_degree(seo->order[fp], i);

    int found = 0;
    int best_pos = -1;
    auto consider = [&](int cand) {
        if (has_dom_nbr[cand] && fwd.closed_forward_degree(cand, i) == target) {
            ++found;
            best_pos = std::max(best_pos, seo->pos[cand]);
        }
    };
    consider(vi);
    for (int u : fwd.forward_neighbors(vi, i))
        consider(u);

    if (count)
        *count = found;
    return best_pos < 0 ? -1 : seo->order[best_pos];
}

int SolverState::settle_pending_around(int k)
{
    int cleared = 0;
    auto visit = [&](int u) {
        int s = mark[u];  // re-read: an earlier pairing may have cleared it
        if (s != -1) {
            if (checks && label[s] != 1)
                fail("stamp references a vertex that is not pending");
            label[s] = 2;
            cleared += unmark_closed(s);
        }
    };
    visit(k);
    for (int u : g->neighbors(k))
        visit(u);
    return cleared;
}

} // namespace detail

namespace {

using detail::SolverState;

// Distance-two probe used only by the optional runtime checks.
bool selected_within_two(const SolverState& st, int v)
{
    for (int u : st.g->neighbors(v)) {
        if (u != v && st.label[u] > 0)
            return true;
        for (int w : st.g->neighbors(u))
            if (w != v && st.label[w] > 0)
                return true;
    }
    return false;
}

void check_iteration_head(const SolverState& st, int i)
{
    // Everything before position i must be dominated with no stamp left,
    // and every pending vertex must keep a live stamp ahead of i.
    const auto& seo = *st.seo;
    for (int p = 0; p < i; ++p) {
        int v = seo.order[p];
        if (!st.dominated[v])
            st.fail("processed vertex left undominated");
        if (st.mark[v] != -1)
            st.fail("processed vertex left stamped");
    }
    for (int p = 0; p < i; ++p) {
        int v = seo.order[p];
        if (st.label[v] != 1)
            continue;
        bool live = false;
        for (int u : st.g->neighbors(v))
            if (seo.pos[u] >= i && st.mark[u] == v)
                live = true;
        if (!live)
            st.fail("pending vertex has no stamp at or after the current position");
    }
}

} // namespace

SemiTdResult solve(const Graph& g, const SeoOrdering& seo, const SolveOptions& opts)
{
    const int n = g.vertex_count();
    if (n < 3)
        throw too_small("need at least 3 vertices, got " + std::to_string(n));
    if (seo.size() != n)
        throw unverified_ordering("ordering size does not match the graph");
    if (!is_connected(g))
        throw disconnected_input("solver requires a connected graph");
    if (opts.verify_ordering && !verify_seo(g, seo.order))
        throw unverified_ordering("ordering is not a strong elimination ordering");

    SolverState st(g, seo);
    st.checks = opts.checks;
    st.selected.reserve(16);

    SemiTdResult result;
    if (opts.trace)
        result.trace.reserve(n);

    // Cheap stand-in for the full head check: position i-1 must come out
    // of its own iteration dominated and unstamped.
    const bool full_checks = opts.checks && n <= 4096;

    auto select = [&](int v, int lbl) {
        if (st.checks && st.label[v] != 0)
            st.fail("vertex selected twice");
        st.label[v] = static_cast<std::uint8_t>(lbl);
        st.selected.push_back(v);
    };

    for (int i = 0; i < n; ++i) {
        const int vi = seo.order[i];
        if (st.checks) {
            if (full_checks)
                check_iteration_head(st, i);
            else if (i > 0) {
                int prev = seo.order[i - 1];
                if (!st.dominated[prev] || st.mark[prev] != -1)
                    st.fail("previous position left undominated or stamped");
            }
        }

        TraceEvent ev;
        ev.position = i;

        if (!st.dominated[vi] && seo.f[i] != i) {
            if (st.checks && st.mark[vi] != -1)
                st.fail("undominated vertex carries a stamp");
            int count = 0;
            int vk = st.best_paired_candidate(i, &count);
            ev.candidates = count;
            if (vk < 0) {
                // Nothing nearby is selected yet: take the highest neighbor
                // unpaired and stamp its closed neighborhood so a later
                // iteration owes it a partner.
                int fj = seo.order[seo.f[i]];
                select(fj, 1);
                ev.kind = step_kind::select_pending;
                ev.selected = fj;
                ev.marks_set = st.mark_closed(fj, i);
                st.dominate_closed(fj);
            } else {
                // Some candidate already touches a dominated vertex, i.e. a
                // selected vertex sits within distance two of it: it enters
                // paired, and any stamps met around it are settled.
                select(vk, 2);
                ev.kind = step_kind::select_paired;
                ev.selected = vk;
                st.dominate_closed(vk);
                ev.marks_cleared = st.settle_pending_around(vk);
                if (st.checks && !selected_within_two(st, vk))
                    st.fail("paired selection has no selected vertex within distance two");
            }
        } else if (!st.dominated[vi]) {
            // Undominated with every neighbor behind it: only possible at
            // the last position on a connected graph. All neighbors are
            // dominated, so a selected vertex sits within distance two.
            if (st.checks && i != n - 1)
                st.fail("self-maximal undominated vertex before the last position");
            select(vi, 2);
            ev.kind = step_kind::select_last;
            ev.selected = vi;
            st.dominated[vi] = 1;
            st.has_dom_nbr[vi] = 1;
            for (int u : g.neighbors(vi))
                st.has_dom_nbr[u] = 1;
            if (st.checks && !selected_within_two(st, vi))
                st.fail("last selection has no selected vertex within distance two");
        } else if (st.mark[vi] != -1) {
            const int s_id = st.mark[vi];
            const int s = seo.pos[s_id];
            const int t = seo.f[s];
            if (st.checks && (st.label[s_id] != 1 || i > t))
                st.fail("stale stamp at a dominated vertex");
            if (i < t) {
                // The stamp on the highest neighbor of the pending vertex is
                // still ahead; this copy can go.
                st.mark[vi] = -1;
                ev.kind = step_kind::clear_mark;
                ev.paired = -1;
                ev.marks_cleared = 1;
                if (st.checks) {
                    bool later = st.mark[s_id] == s_id && seo.pos[s_id] > i;
                    for (int u : g.neighbors(s_id))
                        if (seo.pos[u] > i && st.mark[u] == s_id)
                            later = true;
                    if (!later)
                        st.fail("dropped the only stamp of a pending vertex");
                }
            } else if (seo.f[i] == i) {
                // Last position, pairing due now: any member of the closed
                // neighborhood other than the pending vertex works; take the
                // highest-positioned one (vi itself unless vi is pending).
                int u = vi != s_id ? vi : -1;
                if (u < 0) {
                    for (int w : g.neighbors(vi))
                        if (w != s_id && (u < 0 || seo.pos[w] > seo.pos[u]))
                            u = w;
                }
                if (u < 0)
                    st.fail("no partner available at the last position");
                select(u, 2);
                st.label[s_id] = 2;
                ev.kind = step_kind::pair_last;
                ev.selected = u;
                ev.paired = s_id;
                ev.marks_cleared = st.unmark_closed(s_id);
            } else {
                // Pairing due here: select this vertex's highest neighbor as
                // the partner; it also dominates new ground, which can
                // settle further stamps around it.
                int fj = seo.order[seo.f[i]];
                select(fj, 2);
                st.label[s_id] = 2;
                ev.kind = step_kind::pair_forward;
                ev.selected = fj;
                ev.paired = s_id;
                ev.marks_cleared = st.unmark_closed(s_id);
                st.dominate_closed(fj);
                ev.marks_cleared += st.settle_pending_around(fj);
            }
        } else {
            ev.kind = step_kind::none;
        }

        if (opts.trace)
            result.trace.push_back(ev);
    }

    std::vector<int> members;
    members.reserve(st.selected.size());
    for (int v : st.selected) {
        if (st.checks && st.label[v] == 1)
            st.fail("pending vertex survived to termination");
        assert(st.label[v] == 2);
        if (st.label[v] == 2)
            members.push_back(v);
    }
    result.set = VertexSet::from_unsorted(std::move(members));
    result.size = result.set.size();
    assert(result.size >= 2);
    return result;
}

SemiTdResult solve_with_trace(const Graph& g, const SeoOrdering& seo)
{
    SolveOptions opts;
    opts.trace = true;
    opts.checks = true;
    return solve(g, seo, opts);
}

} // namespace semitd
