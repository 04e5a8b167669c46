#ifndef SEMITD_SEMITOTAL_HPP
#define SEMITD_SEMITOTAL_HPP

#include <cstdint>
#include <vector>

#include "semitd/graph.hpp"
#include "semitd/ordering.hpp"
#include "semitd/vertex_set.hpp"

namespace semitd {

// Greedy solver for minimum semitotal dominating sets over a strong
// elimination ordering. It sweeps the positions once and maintains three
// per-vertex labels:
//   dominated  in {0,1}
//   label      in {0,1,2}: 0 unselected; 1 selected but no other selected
//              vertex within distance two yet; 2 selected and paired
//   mark       id of a label-1 vertex whose pairing is still owed, stamped
//              on that vertex's closed neighborhood (-1 when clear)
// The returned set is {v : label(v) = 2}; every label-1 vertex gets paired
// before the sweep ends. Runs in O(n + m).

enum class step_kind : std::uint8_t {
    none,            // already dominated, nothing owed
    select_pending,  // no eligible paired candidate: take the highest
                     // neighbor unpaired and stamp its neighborhood
    select_paired,   // an eligible candidate already touches a dominated
                     // vertex: take the highest one as paired
    select_last,     // last position still undominated
    clear_mark,      // owed pairing will be met later; drop this stamp
    pair_last,       // stamp due at the last position: pair via a closed
                     // neighbor of it
    pair_forward,    // stamp due here: select this vertex's highest
                     // neighbor and pair
};

struct TraceEvent {
    int position = -1;  // 0-based position processed
    step_kind kind = step_kind::none;
    int selected = -1;   // vertex selected this step, if any
    int paired = -1;     // pending vertex paired this step, if any
    int candidates = 0;  // eligible paired-candidate count (select_* steps)
    int marks_set = 0;
    int marks_cleared = 0;
};

struct SemiTdResult {
    VertexSet set;  // sorted original vertex ids
    int size = 0;
    std::vector<TraceEvent> trace;  // one event per position when requested
};

struct SolveOptions {
    bool verify_ordering = true;  // run verify_seo first (throws unverified_ordering)
    bool trace = false;           // record one TraceEvent per position
    bool checks = false;          // validate solver invariants while running
                                  // (throws invariant_violation on failure)
};

/// Computes a minimum semitotal dominating set of a connected graph with
/// n >= 3 given a strong elimination ordering. Throws too_small,
/// disconnected_input, or unverified_ordering on bad input. Deterministic:
/// identical inputs produce identical sets and traces.
SemiTdResult solve(const Graph& g, const SeoOrdering& seo, const SolveOptions& opts = {});

/// solve() with tracing and invariant checks enabled.
SemiTdResult solve_with_trace(const Graph& g, const SeoOrdering& seo);

namespace detail {

/// Mutable solver state, exposed so tests can drive single operations.
/// Owned by exactly one solve() run; graph and ordering are read-only.
struct SolverState {
    const Graph* g;
    const SeoOrdering* seo;
    ForwardView fwd;
    std::vector<std::uint8_t> dominated;
    std::vector<std::uint8_t> label;
    std::vector<std::uint8_t> has_dom_nbr;  // some closed neighbor is dominated
    std::vector<int> mark;                  // owing label-1 vertex id, or -1
    std::vector<int> selected;              // selection order
    bool checks = false;

    SolverState(const Graph& g, const SeoOrdering& seo);

    /// Mark u and every neighbor as dominated-adjacent; flip dominated
    /// flags for the closed neighborhood of x. Each vertex flips once
    /// over a run, so the total cost is O(n + m).
    void dominate_closed(int x);

    /// Stamp j on every closed neighbor of j with position > i.
    /// Returns the number of stamps written.
    int mark_closed(int j, int i);

    /// Clear the stamps on the closed neighborhood of s. Idempotent.
    int unmark_closed(int s);

    /// The eligible paired candidates at position i are the members of
    /// N_i[v_i] whose closed forward degree equals that of the highest
    /// neighbor of v_i and that already touch a dominated vertex. (Every
    /// member's forward closed neighborhood is contained in the highest
    /// neighbor's, so degree equality means set equality.) Returns the
    /// highest-positioned candidate, or -1; candidate count in *count.
    int best_paired_candidate(int i, int* count);

    /// Visit the closed neighborhood of k; every stamp met there pairs its
    /// owing vertex (label 1 -> 2) and clears that vertex's stamps. Stamps
    /// are re-read at visit time since an earlier pairing in the same scan
    /// can clear later ones. Returns stamps cleared.
    int settle_pending_around(int k);

    void fail(const char* msg) const;
};

} // namespace detail

} // namespace semitd

#endif
