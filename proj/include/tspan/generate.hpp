#pragma once

// Seeded instance generators. Shuffles are hand-rolled Fisher-Yates over
// mt19937_64 so identical seeds give identical graphs on any platform.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tspan/graph.hpp"

namespace tspan {

namespace detail {

template <typename T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng() % i);
        std::swap(v[i - 1], v[j]);
    }
}

inline std::string gen_node_name(int i) { return "v" + std::to_string(i); }

}  // namespace detail

// Complete graph on n nodes whose labels are a seeded permutation of
// 0..C(n,2)-1; globally unique labels make the result proper.
inline TemporalGraph gen_random_clique(int n, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_random_clique: need n >= 2");
    std::mt19937_64 rng(seed);
    const int m = n * (n - 1) / 2;
    std::vector<Label> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = i;
    detail::seeded_shuffle(labels, rng);
    GraphBuilder b;
    for (int i = 0; i < n; ++i) b.add_node(detail::gen_node_name(i));
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            b.add_contact(detail::gen_node_name(i), detail::gen_node_name(j), labels[k++]);
    return b.build();
}

// Complete graph on n nodes labeled 1..C(n,2) along an edge ordering in which
// consecutive edges share a node (seeded backtracking over orderings); the
// result is compressed and full-range by construction. Candidates with the
// fewest onward continuations are tried first, which keeps the backtracking
// shallow; a step cap plus reshuffled restarts covers the stragglers.
inline TemporalGraph gen_full_range_clique(int n, uint64_t seed) {
    if (n < 3 || n > 8)
        throw std::invalid_argument("gen_full_range_clique: need 3 <= n <= 8");
    std::mt19937_64 rng(seed);
    const int m = n * (n - 1) / 2;
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) edges.push_back({i, j});

    auto adjacent = [&](int a, int b) {
        return edges[a].first == edges[b].first || edges[a].first == edges[b].second ||
               edges[a].second == edges[b].first || edges[a].second == edges[b].second;
    };

    std::vector<int> order;
    std::vector<char> used(m, 0);
    long long steps = 0;
    const long long step_cap = 500'000;

    auto search = [&](auto&& self, int depth) -> bool {
        if (depth == m) return true;
        std::vector<std::pair<int, int>> ranked;  // (onward continuations, candidate)
        for (int c = 0; c < m; ++c) {
            if (used[c]) continue;
            if (depth > 0 && !adjacent(order.back(), c)) continue;
            int onward = 0;
            for (int d = 0; d < m; ++d)
                if (!used[d] && d != c && adjacent(c, d)) ++onward;
            ranked.push_back({onward, c});
        }
        std::stable_sort(ranked.begin(), ranked.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto [onward, c] : ranked) {
            if (++steps > step_cap) return false;
            used[c] = 1;
            order.push_back(c);
            if (self(self, depth + 1)) return true;
            order.pop_back();
            used[c] = 0;
        }
        return false;
    };

    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
        detail::seeded_shuffle(edges, rng);
        order.clear();
        std::fill(used.begin(), used.end(), 0);
        steps = 0;
        found = search(search, 0);
    }
    if (!found) throw std::runtime_error("gen_full_range_clique: backtracking failed");

    GraphBuilder b;
    for (int i = 0; i < n; ++i) b.add_node(detail::gen_node_name(i));
    for (int pos = 0; pos < m; ++pos) {
        auto [u, v] = edges[order[pos]];
        b.add_contact(detail::gen_node_name(u), detail::gen_node_name(v),
                      static_cast<Label>(pos + 1));
    }
    return b.build();
}

}  // namespace tspan
