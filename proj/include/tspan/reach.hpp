#pragma once

// Non-strict temporal reachability: a temporal path traverses adjacent
// contacts with non-decreasing labels. Earliest arrivals are computed by a
// single sweep over contacts in increasing label order; with proper labelings
// ties can only involve non-adjacent contacts, which never chain.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "tspan/graph.hpp"

namespace tspan {

struct ReachabilityMatrix {
    int n = 0;
    std::vector<uint8_t> ok;  // row-major n*n
    std::vector<Label> arr;   // earliest arrival; meaningful when ok and u != v

    bool at(NodeId u, NodeId v) const { return ok[static_cast<size_t>(u) * n + v] != 0; }

    std::optional<Label> arrival(NodeId u, NodeId v) const {
        if (u == v || !at(u, v)) return std::nullopt;
        return arr[static_cast<size_t>(u) * n + v];
    }

    bool all() const {
        for (uint8_t b : ok)
            if (!b) return false;
        return true;
    }

    // entry-for-entry boolean comparison
    bool same_relation(const ReachabilityMatrix& o) const { return n == o.n && ok == o.ok; }
};

namespace detail {
constexpr Label kUnreached = std::numeric_limits<Label>::max();
constexpr Label kAtSource = -1;  // labels are non-negative
}  // namespace detail

inline ReachabilityMatrix reachability(
    const TemporalGraph& g,
    const std::optional<std::vector<NodeId>>& restrict_nodes = std::nullopt,
    const std::optional<EdgeSubset>& edges = std::nullopt) {
    const int n = g.node_count();
    ReachabilityMatrix r;
    r.n = n;
    r.ok.assign(static_cast<size_t>(n) * n, 0);
    r.arr.assign(static_cast<size_t>(n) * n, detail::kUnreached);

    std::vector<char> in_scope(n, 1);
    if (restrict_nodes) {
        std::fill(in_scope.begin(), in_scope.end(), 0);
        for (NodeId v : *restrict_nodes) in_scope.at(v) = 1;
    }
    std::vector<char> in_sub(g.contact_count(), 1);
    if (edges) {
        std::fill(in_sub.begin(), in_sub.end(), 0);
        for (EdgeId e : edges->ids) in_sub[e] = 1;
    }

    std::vector<Label> arrival(n);
    for (NodeId s = 0; s < n; ++s) {
        r.ok[static_cast<size_t>(s) * n + s] = 1;  // reflexive for every node
        if (!in_scope[s]) continue;
        std::fill(arrival.begin(), arrival.end(), detail::kUnreached);
        arrival[s] = detail::kAtSource;
        for (EdgeId e = 0; e < g.contact_count(); ++e) {
            if (!in_sub[e]) continue;
            const Contact& c = g.contact(e);
            if (!in_scope[c.u] || !in_scope[c.v]) continue;
            if (arrival[c.u] <= c.t && c.t < arrival[c.v]) arrival[c.v] = c.t;
            if (arrival[c.v] <= c.t && c.t < arrival[c.u]) arrival[c.u] = c.t;
        }
        for (NodeId v = 0; v < n; ++v) {
            if (v == s || arrival[v] == detail::kUnreached) continue;
            r.ok[static_cast<size_t>(s) * n + v] = 1;
            r.arr[static_cast<size_t>(s) * n + v] = arrival[v];
        }
    }
    return r;
}

inline bool is_temporally_connected(const TemporalGraph& g) {
    return reachability(g).all();
}

// True iff the subgraph on all nodes of g, keeping only the contacts of s, is
// temporally connected.
inline bool verify_spanner(const TemporalGraph& g, const EdgeSubset& s) {
    return reachability(g, std::nullopt, s).all();
}

}  // namespace tspan
