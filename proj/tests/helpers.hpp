#pragma once

// Shared test utilities: tiny fixtures, seeded corpora, and a naive DFS
// reachability oracle kept independent of the swept implementation.

#include <cstdint>
#include <functional>
#include <vector>

#include "tspan/fixtures.hpp"
#include "tspan/generate.hpp"
#include "tspan/graph.hpp"

namespace th {

inline tspan::TemporalGraph k2() {
    tspan::GraphBuilder b;
    b.add_contact("a", "b", 5);
    return b.build();
}

// ab:1 bc:2 ac:3 cd:4 bd:5 ad:6 — full-range K4 whose pivot is cd
inline tspan::TemporalGraph full_range_k4() {
    tspan::GraphBuilder b;
    b.add_contact("a", "b", 1);
    b.add_contact("b", "c", 2);
    b.add_contact("a", "c", 3);
    b.add_contact("c", "d", 4);
    b.add_contact("b", "d", 5);
    b.add_contact("a", "d", 6);
    return b.build();
}

inline uint64_t corpus_seed(int n, int trial) {
    return static_cast<uint64_t>(n) * 1000 + static_cast<uint64_t>(trial);
}

inline void for_random_cliques(int n_lo, int n_hi, int trials,
                               const std::function<void(const tspan::TemporalGraph&, int,
                                                        uint64_t)>& fn) {
    for (int n = n_lo; n <= n_hi; ++n)
        for (int t = 0; t < trials; ++t)
            fn(tspan::gen_random_clique(n, corpus_seed(n, t)), n, corpus_seed(n, t));
}

// Reference reachability: plain DFS over simple temporal paths.
inline bool dfs_reaches(const tspan::TemporalGraph& g, tspan::NodeId from, tspan::NodeId to) {
    if (from == to) return true;
    std::vector<char> visited(g.node_count(), 0);
    bool found = false;
    auto walk = [&](auto&& self, tspan::NodeId at, tspan::Label last) -> void {
        if (found) return;
        if (at == to) {
            found = true;
            return;
        }
        for (tspan::EdgeId e : g.incident(at)) {
            if (g.label(e) < last) continue;
            tspan::NodeId nxt = g.other_end(e, at);
            if (visited[nxt]) continue;
            visited[nxt] = 1;
            self(self, nxt, g.label(e));
            visited[nxt] = 0;
        }
    };
    visited[from] = 1;
    walk(walk, from, -1);
    return found;
}

}  // namespace th
