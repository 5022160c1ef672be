#pragma once

// Dismountability machinery: extremal edges/neighbors, detection of 1-hop and
// k-hop dismountable nodes, step application, and recursive dismounting.
//
// A node u is k-hop dismountable when a temporal path of at most k contacts
// leaves u and arrives at some v through v's earliest in-scope edge, and a
// temporal path of at most k contacts reaches u from some w departing through
// w's latest in-scope edge. Removing u then costs at most 2k spanner edges.

#include <array>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tspan/certificates.hpp"
#include "tspan/graph.hpp"
#include "tspan/reach.hpp"

namespace tspan {

struct ExtremalInfo {
    NodeId node = -1;
    EdgeId e_minus = -1;
    EdgeId e_plus = -1;
    NodeId n_minus = -1;
    NodeId n_plus = -1;
};

namespace detail {

inline std::vector<char> scope_mask(const TemporalGraph& g,
                                    const std::optional<std::vector<NodeId>>& scope) {
    std::vector<char> mask(g.node_count(), 1);
    if (scope) {
        std::fill(mask.begin(), mask.end(), 0);
        for (NodeId v : *scope) mask.at(v) = 1;
    }
    return mask;
}

inline std::vector<NodeId> scope_nodes(const TemporalGraph& g,
                                       const std::optional<std::vector<NodeId>>& scope) {
    std::vector<NodeId> nodes;
    if (scope) {
        nodes = *scope;
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    } else {
        nodes.resize(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) nodes[v] = v;
    }
    return nodes;
}

inline std::optional<ExtremalInfo> extremal_or_none(const TemporalGraph& g, NodeId v,
                                                    const std::vector<char>& mask,
                                                    const EdgeSubset* edges) {
    ExtremalInfo info;
    info.node = v;
    for (EdgeId e : g.incident(v)) {  // sorted by label
        NodeId o = g.other_end(e, v);
        if (!mask[o]) continue;
        if (edges && !edges->contains(e)) continue;
        if (info.e_minus < 0) info.e_minus = e;
        info.e_plus = e;
    }
    if (info.e_minus < 0) return std::nullopt;
    info.n_minus = g.other_end(info.e_minus, v);
    info.n_plus = g.other_end(info.e_plus, v);
    return info;
}

}  // namespace detail

// Earliest/latest incident edge of a node, relative to a node/edge restriction.
// Extremal edges are unique because adjacent labels are distinct.
inline ExtremalInfo extremal(const TemporalGraph& g, NodeId v,
                             const std::optional<std::vector<NodeId>>& scope = std::nullopt,
                             const std::optional<EdgeSubset>& edges = std::nullopt) {
    auto mask = detail::scope_mask(g, scope);
    if (v < 0 || v >= g.node_count() || !mask[v])
        throw std::invalid_argument("extremal: node not in scope");
    auto info = detail::extremal_or_none(g, v, mask, edges ? &*edges : nullptr);
    if (!info)
        throw std::invalid_argument("extremal: node " + g.node_name(v) +
                                    " is isolated in scope");
    return *info;
}

// First witness triple (u, v, w) with u = n^-(v) and u = n^+(w) for the
// smallest u in node order; among u's witnesses, v is the delegate whose
// earliest edge is latest and w the one whose latest edge is earliest
// (remaining ties by node order).
inline std::optional<std::array<NodeId, 3>> find_1hop(
    const TemporalGraph& g, const std::optional<std::vector<NodeId>>& scope = std::nullopt) {
    auto nodes = detail::scope_nodes(g, scope);
    if (nodes.size() < 3) throw std::invalid_argument("find_1hop: scope below 3 nodes");
    auto mask = detail::scope_mask(g, scope);

    std::vector<ExtremalInfo> ext(g.node_count());
    for (NodeId v : nodes) {
        auto info = detail::extremal_or_none(g, v, mask, nullptr);
        if (info) ext[v] = *info;
    }
    for (NodeId u : nodes) {
        NodeId v_hit = -1, w_hit = -1;
        for (NodeId v : nodes) {
            if (v == u || ext[v].n_minus != u) continue;
            if (v_hit < 0 || g.label(ext[v].e_minus) > g.label(ext[v_hit].e_minus)) v_hit = v;
        }
        if (v_hit < 0) continue;
        for (NodeId w : nodes) {
            if (w == u || ext[w].n_plus != u) continue;
            if (w_hit < 0 || g.label(ext[w].e_plus) < g.label(ext[w_hit].e_plus)) w_hit = w;
        }
        if (w_hit >= 0) return std::array<NodeId, 3>{u, v_hit, w_hit};
    }
    return std::nullopt;
}

namespace detail {

struct WitnessPath {
    int len = std::numeric_limits<int>::max();
    Label key = 0;              // emission: last label; reception: first label
    std::vector<NodeId> seq;    // node sequence along the path
    std::vector<EdgeId> edges;  // contacts along the path

    bool found() const { return len != std::numeric_limits<int>::max(); }
    // emission paths prefer arriving through the latest earliest-edge,
    // reception paths prefer departing through the earliest latest-edge;
    // `flip` holds the label key negated for emissions so smaller wins both
    // ways
    bool better(int l, Label flip, const std::vector<NodeId>& s) const {
        if (l != len) return l < len;
        if (flip != key) return flip < key;
        return s < seq;
    }
};

struct SearchState {
    NodeId at;
    Label bound;  // latest arrival so far (forward) / earliest departure (backward)
    std::vector<NodeId> seq;
    std::vector<EdgeId> edges;
};

// Breadth-first over temporal adjacency from u, hop layer by hop layer,
// collecting nodes reached through their earliest in-scope edge. Stops at the
// first layer that yields a witness (deeper paths cannot beat it).
inline WitnessPath best_emission(const TemporalGraph& g, NodeId u, int kmax,
                                 const std::vector<char>& mask,
                                 const std::vector<EdgeId>& e_minus) {
    WitnessPath best;
    std::vector<SearchState> layer{{u, kAtSource, {u}, {}}};
    for (int hop = 1; hop <= kmax && !layer.empty(); ++hop) {
        std::vector<SearchState> next;
        for (const SearchState& s : layer) {
            for (EdgeId e : g.incident(s.at)) {
                const Label t = g.label(e);
                if (t < s.bound) continue;
                NodeId x = g.other_end(e, s.at);
                if (!mask[x]) continue;
                if (std::find(s.seq.begin(), s.seq.end(), x) != s.seq.end()) continue;
                SearchState ns{x, t, s.seq, s.edges};
                ns.seq.push_back(x);
                ns.edges.push_back(e);
                if (e == e_minus[x] && best.better(hop, -t, ns.seq)) {
                    best.len = hop;
                    best.key = -t;
                    best.seq = ns.seq;
                    best.edges = ns.edges;
                }
                next.push_back(std::move(ns));
            }
        }
        if (best.found()) break;
        layer = std::move(next);
    }
    return best;
}

// Backward analogue: paths that reach u departing through the latest in-scope
// edge of their first node. Sequences are stored in path direction (w .. u).
inline WitnessPath best_reception(const TemporalGraph& g, NodeId u, int kmax,
                                  const std::vector<char>& mask,
                                  const std::vector<EdgeId>& e_plus) {
    WitnessPath best;
    std::vector<SearchState> layer{{u, std::numeric_limits<Label>::max(), {u}, {}}};
    for (int hop = 1; hop <= kmax && !layer.empty(); ++hop) {
        std::vector<SearchState> next;
        for (const SearchState& s : layer) {
            for (EdgeId e : g.incident(s.at)) {
                const Label t = g.label(e);
                if (t > s.bound) continue;
                NodeId x = g.other_end(e, s.at);
                if (!mask[x]) continue;
                if (std::find(s.seq.begin(), s.seq.end(), x) != s.seq.end()) continue;
                SearchState ns{x, t, s.seq, s.edges};
                ns.seq.insert(ns.seq.begin(), x);
                ns.edges.insert(ns.edges.begin(), e);
                if (e == e_plus[x] && best.better(hop, t, ns.seq)) {
                    best.len = hop;
                    best.key = t;
                    best.seq = ns.seq;
                    best.edges = ns.edges;
                }
                next.push_back(std::move(ns));
            }
        }
        if (best.found()) break;
        layer = std::move(next);
    }
    return best;
}

}  // namespace detail

// Minimum-cost dismountable node with hop bound <= kmax; ties broken by the
// emission path arriving through the latest earliest-edge, then the reception
// path departing through the earliest latest-edge, then the smallest removed
// node in node order, then lexicographically smallest witness node sequences.
// None when no node qualifies.
inline std::optional<DismountStep> find_k_hop(
    const TemporalGraph& g, const std::optional<std::vector<NodeId>>& scope, int kmax) {
    if (kmax < 1) throw std::invalid_argument("find_k_hop: kmax must be positive");
    auto nodes = detail::scope_nodes(g, scope);
    if (nodes.size() < 3) throw std::invalid_argument("find_k_hop: scope below 3 nodes");
    auto mask = detail::scope_mask(g, scope);

    std::vector<EdgeId> e_minus(g.node_count(), -1), e_plus(g.node_count(), -1);
    for (NodeId v : nodes) {
        auto info = detail::extremal_or_none(g, v, mask, nullptr);
        if (!info) continue;
        e_minus[v] = info->e_minus;
        e_plus[v] = info->e_plus;
    }

    std::optional<DismountStep> best;
    Label best_arrive = 0, best_depart = 0;
    for (NodeId u : nodes) {
        auto em = detail::best_emission(g, u, kmax, mask, e_minus);
        if (!em.found()) continue;
        auto re = detail::best_reception(g, u, kmax, mask, e_plus);
        if (!re.found()) continue;
        const Label arrive = g.label(em.edges.back());
        const Label depart = g.label(re.edges.front());
        if (best) {
            int cost = em.len + re.len;
            if (cost != best->cost()) {
                if (cost > best->cost()) continue;
            } else if (arrive != best_arrive) {
                if (arrive < best_arrive) continue;
            } else if (depart != best_depart) {
                if (depart > best_depart) continue;
            } else {
                continue;  // node order already favors the incumbent
            }
        }
        DismountStep step;
        step.removed = u;
        step.hop_bound = std::max(em.len, re.len);
        step.p_minus = em.edges;
        step.p_plus = re.edges;
        best = std::move(step);
        best_arrive = arrive;
        best_depart = depart;
    }
    return best;
}

// Checks a step against (g, scope): temporal witness paths inside the scope,
// simple, within the hop bound, with the required extremal first/last contacts.
// Throws std::invalid_argument on any violation.
inline void validate_step(const TemporalGraph& g,
                          const std::optional<std::vector<NodeId>>& scope,
                          const DismountStep& step) {
    auto mask = detail::scope_mask(g, scope);
    const NodeId u = step.removed;
    if (u < 0 || u >= g.node_count() || !mask[u])
        throw std::invalid_argument("step: removed node not in scope");
    if (step.p_minus.empty() || step.p_plus.empty())
        throw std::invalid_argument("step: witness paths must be non-empty");
    if (static_cast<int>(step.p_minus.size()) > step.hop_bound ||
        static_cast<int>(step.p_plus.size()) > step.hop_bound)
        throw std::invalid_argument("step: path longer than hop bound");

    auto check_path = [&](const std::vector<EdgeId>& edges, NodeId start,
                          const char* which) {
        NodeId at = start;
        Label prev = -1;
        std::vector<NodeId> seen{start};
        for (EdgeId e : edges) {
            if (e < 0 || e >= g.contact_count())
                throw std::invalid_argument(std::string("step: bad edge id in ") + which);
            const Contact& c = g.contact(e);
            if (c.u != at && c.v != at)
                throw std::invalid_argument(std::string("step: ") + which +
                                            " is not a contact path");
            if (c.t < prev)
                throw std::invalid_argument(std::string("step: ") + which +
                                            " is not temporal");
            prev = c.t;
            at = g.other_end(e, at);
            if (!mask[at])
                throw std::invalid_argument(std::string("step: ") + which +
                                            " leaves the scope");
            if (std::find(seen.begin(), seen.end(), at) != seen.end())
                throw std::invalid_argument(std::string("step: ") + which +
                                            " revisits a node");
            seen.push_back(at);
        }
        return at;
    };

    NodeId v = check_path(step.p_minus, u, "p_minus");
    ExtremalInfo ve = extremal(g, v, scope);
    if (step.p_minus.back() != ve.e_minus)
        throw std::invalid_argument("step: p_minus does not end with the earliest edge of " +
                                    g.node_name(v));

    // p_plus runs from w to u; walk it backwards from u
    std::vector<EdgeId> rev(step.p_plus.rbegin(), step.p_plus.rend());
    NodeId w = u;
    {
        Label prev = std::numeric_limits<Label>::max();
        std::vector<NodeId> seen{u};
        for (EdgeId e : rev) {
            if (e < 0 || e >= g.contact_count())
                throw std::invalid_argument("step: bad edge id in p_plus");
            const Contact& c = g.contact(e);
            if (c.u != w && c.v != w)
                throw std::invalid_argument("step: p_plus is not a contact path");
            if (c.t > prev) throw std::invalid_argument("step: p_plus is not temporal");
            prev = c.t;
            w = g.other_end(e, w);
            if (!mask[w])
                throw std::invalid_argument("step: p_plus leaves the scope");
            if (std::find(seen.begin(), seen.end(), w) != seen.end())
                throw std::invalid_argument("step: p_plus revisits a node");
            seen.push_back(w);
        }
    }
    ExtremalInfo we = extremal(g, w, scope);
    if (step.p_plus.front() != we.e_plus)
        throw std::invalid_argument("step: p_plus does not start with the latest edge of " +
                                    g.node_name(w));
}

// Applies a validated step: shrinks the scope by the removed node and returns
// the union of the witness path contacts (at most 2k edges after dedup).
inline std::pair<std::vector<NodeId>, EdgeSubset> apply_dismount(
    const TemporalGraph& g, const std::optional<std::vector<NodeId>>& scope,
    const DismountStep& step) {
    validate_step(g, scope, step);
    std::vector<NodeId> remaining;
    for (NodeId v : detail::scope_nodes(g, scope))
        if (v != step.removed) remaining.push_back(v);
    std::vector<EdgeId> ids(step.p_minus);
    ids.insert(ids.end(), step.p_plus.begin(), step.p_plus.end());
    return {std::move(remaining), EdgeSubset::of(g, std::move(ids))};
}

// Repeatedly dismounts <=kmax-hop nodes down to 2 nodes and adds the final
// remaining edge. None when the recursion gets stuck earlier. On success the
// spanner has at most 2*kmax*(n-2) + 1 edges.
inline std::optional<SpannerResult> recursively_dismount(const TemporalGraph& g, int kmax) {
    if (!is_clique(g)) throw std::invalid_argument("recursively_dismount: not a clique");
    if (g.node_count() < 1)
        throw std::invalid_argument("recursively_dismount: empty graph");
    SpannerResult out;
    std::vector<EdgeId> ids;
    auto scope = detail::scope_nodes(g, std::nullopt);
    while (scope.size() > 2) {
        auto step = find_k_hop(g, scope, kmax);
        if (!step) return std::nullopt;
        auto [next_scope, selected] = apply_dismount(g, scope, *step);
        ids.insert(ids.end(), selected.ids.begin(), selected.ids.end());
        out.steps.push_back(*step);
        scope = std::move(next_scope);
    }
    if (scope.size() == 2) {
        EdgeId last = *g.edge_between(scope[0], scope[1]);
        ids.push_back(last);
        out.final_edge = last;
    }
    out.edges = EdgeSubset::of(g, std::move(ids));
    return out;
}

}  // namespace tspan
