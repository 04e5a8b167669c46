#include "semitd/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "semitd/errors.hpp"

namespace semitd {

namespace {

std::vector<int> inverse_permutation(const Graph& g, const std::vector<int>& order)
{
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw not_a_permutation("ordering has " + std::to_string(order.size())
                                + " entries, graph has " + std::to_string(n));
    std::vector<int> pos(n, -1);
    for (int p = 0; p < n; ++p) {
        int v = order[p];
        if (v < 0 || v >= n || pos[v] != -1)
            throw not_a_permutation("ordering is not a permutation of the vertices");
        pos[v] = p;
    }
    return pos;
}

// Neighbor positions of every vertex, each list ascending. Built in O(n+m)
// by walking the positions in order.
std::vector<std::vector<int>> neighbor_positions(const Graph& g, const std::vector<int>& order)
{
    std::vector<std::vector<int>> nbp(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        nbp[v].reserve(g.degree(v));
    for (int p = 0; p < static_cast<int>(order.size()); ++p)
        for (int u : g.neighbors(order[p]))
            nbp[u].push_back(p);
    return nbp;
}

// The closed neighborhood of the vertex at position p, restricted to
// positions >= i, as an ascending position list. Requires p >= i.
void restricted_closed(int p, const std::vector<int>& nbp, int i, std::vector<int>& out)
{
    out.clear();
    auto it = std::lower_bound(nbp.begin(), nbp.end(), i);
    bool self_done = false;
    for (; it != nbp.end(); ++it) {
        if (!self_done && p < *it) {
            out.push_back(p);
            self_done = true;
        }
        out.push_back(*it);
    }
    if (!self_done)
        out.push_back(p);
}

} // namespace

SeoOrdering SeoOrdering::build(const Graph& g, std::vector<int> order)
{
    const int n = g.vertex_count();
    SeoOrdering seo;
    seo.pos = inverse_permutation(g, order);
    seo.order = std::move(order);

    seo.f.resize(n);
    for (int p = 0; p < n; ++p) {
        int best = p;  // vertex with no neighbor maps to itself
        for (int u : g.neighbors(seo.order[p]))
            best = std::max(best, seo.pos[u]);
        seo.f[p] = (p == n - 1) ? n - 1 : best;
    }

    seo.fwd_offsets.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
        seo.fwd_offsets[v + 1] = seo.fwd_offsets[v] + g.degree(v);
    seo.fwd_targets.resize(seo.fwd_offsets[n]);
    std::vector<int> fill(seo.fwd_offsets.begin(), seo.fwd_offsets.end() - 1);
    for (int p = 0; p < n; ++p) {
        int v = seo.order[p];
        for (int u : g.neighbors(v))
            seo.fwd_targets[fill[u]++] = v;
    }
    return seo;
}

bool verify_seo(const Graph& g, const std::vector<int>& order)
{
    const int n = g.vertex_count();
    inverse_permutation(g, order);  // validation only
    auto nbp = neighbor_positions(g, order);

    // Containment is transitive, so checking consecutive members of
    // N_i[v_i] (by position) covers every i <= j <= k pair.
    std::vector<int> members, lhs, rhs;
    for (int i = 0; i < n; ++i) {
        int vi = order[i];
        members.clear();
        members.push_back(i);
        auto it = std::lower_bound(nbp[vi].begin(), nbp[vi].end(), i);
        members.insert(members.end(), it, nbp[vi].end());
        for (std::size_t t = 0; t + 1 < members.size(); ++t) {
            restricted_closed(members[t], nbp[order[members[t]]], i, lhs);
            restricted_closed(members[t + 1], nbp[order[members[t + 1]]], i, rhs);
            if (!std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end()))
                return false;
        }
    }
    return true;
}

VertexSet forward_closed_neighborhood(const Graph& g, const SeoOrdering& seo, int i, int v)
{
    std::vector<int> out;
    out.push_back(v);
    for (int u : g.neighbors(v))
        if (seo.pos[u] >= i)
            out.push_back(u);
    return VertexSet::from_unsorted(std::move(out));
}

namespace {

// closed(sub) subset of closed(sup), both adjacency lists sorted by id.
bool contains_closed(const std::vector<int>& sup_adj, int sup, const std::vector<int>& sub_adj,
                     int sub)
{
    if (sub != sup && !std::binary_search(sup_adj.begin(), sup_adj.end(), sub))
        return false;
    std::size_t j = 0;
    for (int x : sub_adj) {
        if (x == sup)
            continue;
        while (j < sup_adj.size() && sup_adj[j] < x)
            ++j;
        if (j == sup_adj.size() || sup_adj[j] != x)
            return false;
        ++j;
    }
    return true;
}

// Simple-vertex elimination with precedence bookkeeping.
//
// Deleting a simple vertex freezes a requirement: the members of its
// (then current) closed neighborhood must leave in the order of the
// inclusion chain among their restricted closed neighborhoods. A plain
// greedy forgets this — once a large neighborhood shrinks to match a
// small one the two look interchangeable, though the frozen chain still
// tells them apart — and the resulting order can fail the strong
// property. So every strict jump in a deleted vertex's chain is recorded
// as a precedence level: the later group stays blocked until the earlier
// group is gone. Eliminating only unblocked simple vertices makes every
// frozen requirement hold by construction, which is exactly the strong
// elimination condition. Containments persist as the graph shrinks, so
// recorded constraints never conflict and the level graph is acyclic.
//
// After a deletion only vertices within distance two can change
// simplicity, so known-not-simple vertices stay retired until such a
// deletion touches them. Returns the deletion order, or nullopt when no
// unblocked simple vertex remains (not strongly chordal, or — not
// observed on any tested instance — a blocked dead end).
class EliminationEngine {
public:
    explicit EliminationEngine(const Graph& g)
        : n_(g.vertex_count()),
          adj_(n_),
          alive_(n_, 1),
          not_simple_(n_, 0),
          block_count_(n_, 0),
          feeds_(n_),
          seen_(n_, -1)
    {
        for (int v = 0; v < n_; ++v) {
            auto nb = g.neighbors(v);
            adj_[v].assign(nb.begin(), nb.end());
        }
        for (int v = 0; v < n_; ++v)
            ready_.insert(v);
    }

    std::optional<std::vector<int>> run()
    {
        std::vector<int> order;
        order.reserve(n_);
        while (static_cast<int>(order.size()) < n_) {
            int pick = -1;
            while (!ready_.empty()) {
                int v = *ready_.begin();
                ready_.erase(ready_.begin());
                if (chain_sorted(v)) {
                    pick = v;
                    break;
                }
                not_simple_[v] = 1;
            }
            if (pick < 0)
                return std::nullopt;
            record_chain_levels(pick);
            remove_vertex(pick, static_cast<int>(order.size()));
            order.push_back(pick);
        }
        return order;
    }

private:
    // Closed neighborhood of v sorted by (degree, id) into members_; true
    // iff consecutive restricted closed neighborhoods nest, i.e. v is
    // simple in the current graph.
    bool chain_sorted(int v)
    {
        members_.clear();
        members_.push_back(v);
        members_.insert(members_.end(), adj_[v].begin(), adj_[v].end());
        std::sort(members_.begin(), members_.end(), [&](int a, int b) {
            auto da = adj_[a].size(), db = adj_[b].size();
            return da != db ? da < db : a < b;
        });
        for (std::size_t t = 0; t + 1 < members_.size(); ++t)
            if (!contains_closed(adj_[members_[t + 1]], members_[t + 1], adj_[members_[t]],
                                 members_[t]))
                return false;
        return true;
    }

    // Equal degree along a verified chain means equal restricted sets, so
    // groups are degree runs in members_. Each strict boundary becomes a
    // counting level: the later group unblocks once the earlier group
    // (minus the vertex being deleted now) is fully gone.
    void record_chain_levels(int pick)
    {
        std::size_t t = 0;
        while (t < members_.size()) {
            std::size_t e = t;
            while (e + 1 < members_.size()
                   && adj_[members_[e + 1]].size() == adj_[members_[t]].size())
                ++e;
            if (e + 1 < members_.size()) {
                const int level = static_cast<int>(level_pending_.size());
                int pending = 0;
                for (std::size_t a = t; a <= e; ++a) {
                    if (members_[a] != pick) {
                        feeds_[members_[a]].push_back(level);
                        ++pending;
                    }
                }
                if (pending > 0) {
                    level_pending_.push_back(pending);
                    level_blocks_.emplace_back();
                    std::size_t e2 = e + 1;
                    while (e2 + 1 < members_.size()
                           && adj_[members_[e2 + 1]].size() == adj_[members_[e + 1]].size())
                        ++e2;
                    for (std::size_t b = e + 1; b <= e2; ++b) {
                        level_blocks_[level].push_back(members_[b]);
                        if (block_count_[members_[b]]++ == 0)
                            ready_.erase(members_[b]);
                    }
                }
            }
            t = e + 1;
        }
    }

    void remove_vertex(int pick, int round)
    {
        affected_.clear();
        seen_[pick] = round;
        for (int w : adj_[pick]) {
            if (seen_[w] != round) {
                seen_[w] = round;
                affected_.push_back(w);
            }
            for (int x : adj_[w]) {
                if (seen_[x] != round) {
                    seen_[x] = round;
                    affected_.push_back(x);
                }
            }
        }
        for (int w : adj_[pick])
            adj_[w].erase(std::lower_bound(adj_[w].begin(), adj_[w].end(), pick));
        adj_[pick].clear();
        alive_[pick] = 0;
        for (int level : feeds_[pick]) {
            if (--level_pending_[level] == 0)
                for (int b : level_blocks_[level])
                    if (--block_count_[b] == 0)
                        make_ready(b);
        }
        feeds_[pick].clear();
        for (int x : affected_) {
            not_simple_[x] = 0;
            make_ready(x);
        }
    }

    void make_ready(int v)
    {
        if (alive_[v] && block_count_[v] == 0 && !not_simple_[v])
            ready_.insert(v);
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> alive_;
    std::vector<char> not_simple_;
    std::vector<int> block_count_;
    std::vector<std::vector<int>> level_blocks_;
    std::vector<int> level_pending_;
    std::vector<std::vector<int>> feeds_;
    std::set<int> ready_;
    std::vector<int> seen_;
    std::vector<int> members_;
    std::vector<int> affected_;
};

std::optional<std::vector<int>> eliminate_simple(const Graph& g)
{
    return EliminationEngine(g).run();
}

} // namespace

bool is_simple_vertex(const Graph& g, int v)
{
    // Chain implies the closed neighborhood is a clique, so this single
    // containment sweep is the whole test.
    std::vector<int> closed;
    closed.push_back(v);
    auto nb = g.neighbors(v);
    closed.insert(closed.end(), nb.begin(), nb.end());
    std::sort(closed.begin(), closed.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da < db : a < b;
    });
    for (std::size_t t = 0; t + 1 < closed.size(); ++t) {
        int sub = closed[t], sup = closed[t + 1];
        if (sub != sup && !g.adjacent(sub, sup))
            return false;
        bool ok = true;
        auto sup_nb = g.neighbors(sup);
        for (int x : g.neighbors(sub)) {
            if (x == sup)
                continue;
            if (!std::binary_search(sup_nb.begin(), sup_nb.end(), x)) {
                ok = false;
                break;
            }
        }
        if (!ok)
            return false;
    }
    return true;
}

SeoOrdering find_seo(const Graph& g)
{
    const int n = g.vertex_count();
    auto order = eliminate_simple(g);
    if (!order)
        throw not_strongly_chordal("no eligible simple vertex at some elimination step");

    if (verify_seo(g, *order))
        return SeoOrdering::build(g, std::move(*order));

    // The elimination order exists but fails the strong property. For tiny
    // graphs search all permutations (lexicographic, first hit wins) so the
    // verifier stays the ground truth; otherwise give up.
    if (n <= 10) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (verify_seo(g, perm))
                return SeoOrdering::build(g, perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        throw not_strongly_chordal("no permutation verifies as a strong elimination ordering");
    }
    throw not_strongly_chordal("elimination order failed strong elimination verification");
}

} // namespace semitd
