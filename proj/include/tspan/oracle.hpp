#pragma once

// Brute-force oracles. These are deliberately written as plain enumeration and
// BFS over explicit contact states, sharing only the graph type with the
// optimized modules, so agreement between the two routes is meaningful.

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "tspan/graph.hpp"
#include "tspan/reach.hpp"

namespace tspan {

struct SearchBudget {
    int max_size = std::numeric_limits<int>::max();
    long long time_limit_ms = -1;  // <0: unlimited
};

struct MinSpannerResult {
    std::optional<EdgeSubset> edges;
    bool budget_exhausted = false;

    int size() const { return edges ? edges->size() : -1; }
};

namespace oracle_detail {

// earliest-arrival check over the chosen edges only; `pick` ascending = label
// order
inline bool tc_over(const TemporalGraph& g, const std::vector<EdgeId>& pick,
                    std::vector<Label>& arr) {
    const int n = g.node_count();
    constexpr Label kUnreached = std::numeric_limits<Label>::max();
    for (NodeId s = 0; s < n; ++s) {
        arr.assign(n, kUnreached);
        arr[s] = -1;
        int reached = 1;
        for (EdgeId e : pick) {
            const Contact& c = g.contact(e);
            if (arr[c.u] <= c.t && c.t < arr[c.v]) {
                if (arr[c.v] == kUnreached) ++reached;
                arr[c.v] = c.t;
            }
            if (arr[c.v] <= c.t && c.t < arr[c.u]) {
                if (arr[c.u] == kUnreached) ++reached;
                arr[c.u] = c.t;
            }
        }
        if (reached != n) return false;
    }
    return true;
}

// spanning connected footprint is necessary for temporal connectivity
inline bool covers_and_connects(const TemporalGraph& g, const std::vector<EdgeId>& pick,
                                std::vector<int>& parent) {
    const int n = g.node_count();
    parent.assign(n, -1);
    auto find = [&](int x) {
        while (parent[x] >= 0) x = parent[x];
        return x;
    };
    int components = n;
    std::vector<char> touched(n, 0);
    for (EdgeId e : pick) {
        const Contact& c = g.contact(e);
        touched[c.u] = touched[c.v] = 1;
        int a = find(c.u), b = find(c.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    if (components != 1) return false;
    for (char t : touched)
        if (!t) return false;
    return true;
}

}  // namespace oracle_detail

// Enumerates edge subsets by increasing size (then lexicographically) and
// returns the first temporal spanner found, i.e. a minimum one. Subsets whose
// footprint does not connect all nodes are pruned before the temporal check.
inline MinSpannerResult min_spanner_bruteforce(const TemporalGraph& g,
                                               const SearchBudget& budget = {}) {
    if (!is_temporally_connected(g))
        throw std::invalid_argument("min_spanner_bruteforce: input is not TC");
    const int n = g.node_count();
    const int m = g.contact_count();
    if (n <= 1) return {EdgeSubset{}, false};

    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::milliseconds(budget.time_limit_ms < 0
                                                        ? std::numeric_limits<long long>::max() / 2
                                                        : budget.time_limit_ms);
    const int cap = std::min(m, budget.max_size);
    std::vector<Label> arr;
    std::vector<int> uf;
    long long probe = 0;

    for (int k = std::max(n - 1, 1); k <= cap; ++k) {
        std::vector<EdgeId> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            if ((++probe & 8191) == 0 && std::chrono::steady_clock::now() > deadline)
                return {std::nullopt, true};
            if (oracle_detail::covers_and_connects(g, pick, uf) &&
                oracle_detail::tc_over(g, pick, arr))
                return {EdgeSubset::of(g, pick), false};
            // next k-combination of 0..m-1
            int i = k - 1;
            while (i >= 0 && pick[i] == m - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return {std::nullopt, true};
}

// Starting from all contacts, removes random edges whose removal keeps the
// graph temporally connected until none can go. Removability is monotone, so
// one seeded pass yields a minimal spanner.
inline EdgeSubset minimal_spanner_greedy(const TemporalGraph& g, uint64_t seed) {
    if (!is_temporally_connected(g))
        throw std::invalid_argument("minimal_spanner_greedy: input is not TC");
    std::mt19937_64 rng(seed);
    std::vector<EdgeId> order(g.contact_count());
    for (int i = 0; i < g.contact_count(); ++i) order[i] = i;
    for (size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

    std::vector<char> kept(g.contact_count(), 1);
    std::vector<EdgeId> pick;
    std::vector<Label> arr;
    for (EdgeId e : order) {
        kept[e] = 0;
        pick.clear();
        for (int i = 0; i < g.contact_count(); ++i)
            if (kept[i]) pick.push_back(i);
        if (!oracle_detail::tc_over(g, pick, arr)) kept[e] = 1;
    }
    std::vector<EdgeId> ids;
    for (int i = 0; i < g.contact_count(); ++i)
        if (kept[i]) ids.push_back(i);
    return EdgeSubset::of(g, std::move(ids));
}

// Exhaustive enumeration of simple temporal paths up to kmax hops certifying
// every dismountable node of a clique together with its minimum witness cost.
inline std::vector<std::pair<NodeId, int>> oracle_dismountable_nodes(const TemporalGraph& g,
                                                                     int kmax) {
    if (!is_clique(g)) throw std::invalid_argument("oracle_dismountable_nodes: not a clique");
    if (kmax < 1) throw std::invalid_argument("oracle_dismountable_nodes: kmax must be positive");
    const int n = g.node_count();
    if (n < 3) return {};

    std::vector<EdgeId> emin(n, -1), emax(n, -1);
    for (NodeId v = 0; v < n; ++v) {
        const auto& inc = g.incident(v);  // label-sorted
        emin[v] = inc.front();
        emax[v] = inc.back();
    }

    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> best_minus(n, kInf), best_plus(n, kInf);
    std::vector<char> visited(n, 0);

    // emission side: paths from u that arrive somewhere through its earliest
    // edge
    for (NodeId u = 0; u < n; ++u) {
        auto dfs = [&](auto&& self, NodeId at, Label last, int len) -> void {
            for (EdgeId e : g.incident(at)) {
                if (g.label(e) < last) continue;
                NodeId x = g.other_end(e, at);
                if (visited[x]) continue;
                if (e == emin[x] && len + 1 < best_minus[u]) best_minus[u] = len + 1;
                if (len + 1 < kmax) {
                    visited[x] = 1;
                    self(self, x, g.label(e), len + 1);
                    visited[x] = 0;
                }
            }
        };
        std::fill(visited.begin(), visited.end(), 0);
        visited[u] = 1;
        dfs(dfs, u, -1, 0);
    }

    // reception side: paths that depart some w through its latest edge; every
    // node they touch gains a reception witness of that length
    for (NodeId w = 0; w < n; ++w) {
        EdgeId first = emax[w];
        NodeId start = g.other_end(first, w);
        if (1 < best_plus[start]) best_plus[start] = 1;
        auto dfs = [&](auto&& self, NodeId at, Label last, int len) -> void {
            if (len >= kmax) return;
            for (EdgeId e : g.incident(at)) {
                if (g.label(e) < last) continue;
                NodeId x = g.other_end(e, at);
                if (visited[x]) continue;
                if (len + 1 < best_plus[x]) best_plus[x] = len + 1;
                visited[x] = 1;
                self(self, x, g.label(e), len + 1);
                visited[x] = 0;
            }
        };
        std::fill(visited.begin(), visited.end(), 0);
        visited[w] = 1;
        visited[start] = 1;
        dfs(dfs, start, g.label(first), 1);
    }

    std::vector<std::pair<NodeId, int>> out;
    for (NodeId u = 0; u < n; ++u)
        if (best_minus[u] <= kmax && best_plus[u] <= kmax)
            out.push_back({u, best_minus[u] + best_plus[u]});
    return out;
}

// Exhaustive pivot check: BFS over contact states (contact, exit node). A node
// reaches the edge when one of its departure states reaches a traversal of the
// edge; the edge reaches a node when a traversal state reaches an arrival at
// it.
inline std::vector<EdgeId> oracle_pivot_edges(const TemporalGraph& g) {
    if (!is_temporally_connected(g))
        throw std::invalid_argument("oracle_pivot_edges: input is not TC");
    const int n = g.node_count();
    const int m = g.contact_count();
    std::vector<EdgeId> out;
    if (m == 0) return out;

    auto sid = [&](EdgeId e, NodeId exit) { return 2 * e + (g.contact(e).v == exit ? 1 : 0); };
    std::vector<std::vector<int>> fwd(2 * m), bwd(2 * m);
    for (EdgeId e = 0; e < m; ++e) {
        for (NodeId exit : {g.contact(e).u, g.contact(e).v}) {
            int s = sid(e, exit);
            for (EdgeId f : g.incident(exit)) {
                if (f == e || g.label(f) < g.label(e)) continue;
                int t = sid(f, g.other_end(f, exit));
                fwd[s].push_back(t);
                bwd[t].push_back(s);
            }
        }
    }

    std::vector<char> seen(2 * m);
    std::vector<int> queue;
    auto bfs = [&](std::vector<int> seeds, const std::vector<std::vector<int>>& adj) {
        std::fill(seen.begin(), seen.end(), 0);
        queue = std::move(seeds);
        for (int s : queue) seen[s] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            for (int t : adj[queue[head]]) {
                if (!seen[t]) {
                    seen[t] = 1;
                    queue.push_back(t);
                }
            }
        }
    };

    std::vector<char> covered(n);
    for (EdgeId e = 0; e < m; ++e) {
        const Contact& piv = g.contact(e);

        bfs({2 * e, 2 * e + 1}, bwd);
        std::fill(covered.begin(), covered.end(), 0);
        covered[piv.u] = covered[piv.v] = 1;
        for (NodeId v = 0; v < n; ++v) {
            for (EdgeId c : g.incident(v))
                if (seen[sid(c, g.other_end(c, v))]) covered[v] = 1;
        }
        bool in_ok = true;
        for (char c : covered)
            if (!c) in_ok = false;
        if (!in_ok) continue;

        bfs({2 * e, 2 * e + 1}, fwd);
        std::fill(covered.begin(), covered.end(), 0);
        covered[piv.u] = covered[piv.v] = 1;
        for (EdgeId c = 0; c < m; ++c) {
            if (seen[2 * c]) covered[g.contact(c).u] = 1;
            if (seen[2 * c + 1]) covered[g.contact(c).v] = 1;
        }
        bool out_ok = true;
        for (char c : covered)
            if (!c) out_ok = false;
        if (out_ok) out.push_back(e);
    }
    return out;
}

// True iff repeatedly deleting nodes of footprint degree <= 2 empties the
// graph (equivalently, the 3-core of the subset footprint is empty).
inline bool footprint_2_degenerate(const TemporalGraph& g, const EdgeSubset& s) {
    const int n = g.node_count();
    std::vector<std::vector<NodeId>> adj(n);
    for (EdgeId e : s.ids) {
        const Contact& c = g.contact(e);
        adj[c.u].push_back(c.v);
        adj[c.v].push_back(c.u);
    }
    std::vector<int> degree(n);
    std::vector<char> gone(n, 0);
    std::vector<NodeId> queue;
    for (NodeId v = 0; v < n; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        if (degree[v] <= 2) {
            gone[v] = 1;
            queue.push_back(v);
        }
    }
    size_t removed = queue.size();
    for (size_t head = 0; head < queue.size(); ++head) {
        for (NodeId w : adj[queue[head]]) {
            if (gone[w]) continue;
            if (--degree[w] <= 2) {
                gone[w] = 1;
                queue.push_back(w);
                ++removed;
            }
        }
    }
    return removed == static_cast<size_t>(n);
}

}  // namespace tspan
