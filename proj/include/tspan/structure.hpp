#pragma once

// Structure of non-dismountable cliques. V^- collects nodes that are the
// earliest neighbor of someone, V^+ the latest; a clique with no <=2-hop
// dismountable node splits into V^-/V^+ of equal size with the extremal cross
// edges forming two perfect matchings, and restricting to the cross edges
// yields a temporally connected bi-clique.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tspan/dismount.hpp"
#include "tspan/graph.hpp"
#include "tspan/reach.hpp"

namespace tspan {

struct MatchEdge {
    NodeId from = -1;  // the node whose extremal edge this is
    NodeId to = -1;
    EdgeId edge = -1;

    bool operator==(const MatchEdge&) const = default;
};

struct PartitionInfo {
    std::vector<NodeId> v_minus, v_plus, v_zero;  // in node order
    EdgeSubset e_minus, e_plus;                   // edges extremal for >=1 node
    // Cross matchings, present only when V^-/V^+ are disjoint and the extremal
    // maps are bijections between them. m_minus pairs each V^+ node with its
    // earliest neighbor, m_plus each V^- node with its latest neighbor.
    std::optional<std::vector<MatchEdge>> m_minus, m_plus;
};

inline PartitionInfo partition(const TemporalGraph& g,
                               const std::optional<std::vector<NodeId>>& scope = std::nullopt) {
    auto nodes = detail::scope_nodes(g, scope);
    auto mask = detail::scope_mask(g, scope);
    {
        long long k = static_cast<long long>(nodes.size()), cnt = 0;
        for (const Contact& c : g.contacts())
            if (mask[c.u] && mask[c.v]) ++cnt;
        if (cnt != k * (k - 1) / 2)
            throw std::invalid_argument("partition: scope is not a clique");
    }

    std::vector<char> in_minus(g.node_count(), 0), in_plus(g.node_count(), 0);
    std::vector<ExtremalInfo> ext(g.node_count());
    std::vector<EdgeId> eminus_ids, eplus_ids;
    for (NodeId v : nodes) {
        auto info = detail::extremal_or_none(g, v, mask, nullptr);
        if (!info) continue;  // single-node scope
        ext[v] = *info;
        in_minus[info->n_minus] = 1;
        in_plus[info->n_plus] = 1;
        eminus_ids.push_back(info->e_minus);
        eplus_ids.push_back(info->e_plus);
    }

    PartitionInfo out;
    for (NodeId v : nodes) {
        if (in_minus[v]) out.v_minus.push_back(v);
        if (in_plus[v]) out.v_plus.push_back(v);
        if (!in_minus[v] && !in_plus[v]) out.v_zero.push_back(v);
    }
    out.e_minus = EdgeSubset::of(g, std::move(eminus_ids));
    out.e_plus = EdgeSubset::of(g, std::move(eplus_ids));

    bool disjoint = true;
    for (NodeId v : nodes)
        if (in_minus[v] && in_plus[v]) disjoint = false;
    if (disjoint && out.v_minus.size() == out.v_plus.size() && !out.v_minus.empty()) {
        std::vector<MatchEdge> mm, mp;
        std::vector<char> hit_minus(g.node_count(), 0), hit_plus(g.node_count(), 0);
        bool inj = true;
        for (NodeId v : out.v_plus) {
            NodeId to = ext[v].n_minus;
            if (hit_minus[to]) inj = false;
            hit_minus[to] = 1;
            mm.push_back({v, to, ext[v].e_minus});
        }
        for (NodeId v : out.v_minus) {
            NodeId to = ext[v].n_plus;
            if (hit_plus[to]) inj = false;
            hit_plus[to] = 1;
            mp.push_back({v, to, ext[v].e_plus});
        }
        if (inj) {
            out.m_minus = std::move(mm);
            out.m_plus = std::move(mp);
        }
    }
    return out;
}

struct StructureReport {
    std::optional<bool> partition_ok;           // V^-/V^+ equal size, partition V
    std::optional<bool> cross_edge_order_ok;    // cross edges later than adjacent
                                                // E^-, earlier than adjacent E^+
    std::optional<bool> matching_label_gap_ok;  // intra-part labels avoid the gap
                                                // between incident matching labels
    std::optional<bool> reciprocity_ok;
    std::map<std::string, std::string> witnesses;

    bool passes() const {
        auto bad = [](const std::optional<bool>& f) { return f.has_value() && !*f; };
        if (bad(partition_ok) || bad(cross_edge_order_ok) || bad(matching_label_gap_ok) ||
            bad(reciprocity_ok))
            return false;
        return partition_ok.value_or(true) && cross_edge_order_ok.value_or(true) &&
               matching_label_gap_ok.value_or(true) && reciprocity_ok.value_or(true);
    }
};

namespace detail {

inline void eval_partition_cond(const TemporalGraph& g, const PartitionInfo& p,
                                StructureReport& r) {
    std::vector<char> minus(g.node_count(), 0);
    for (NodeId v : p.v_minus) minus[v] = 1;
    for (NodeId v : p.v_plus) {
        if (minus[v]) {
            r.partition_ok = false;
            r.witnesses["partition_ok"] =
                "node " + g.node_name(v) + " is both an earliest and a latest neighbor";
            return;
        }
    }
    if (!p.v_zero.empty()) {
        r.partition_ok = false;
        r.witnesses["partition_ok"] =
            "node " + g.node_name(p.v_zero.front()) + " is neither an earliest nor a latest neighbor";
        return;
    }
    if (p.v_minus.size() != p.v_plus.size()) {
        r.partition_ok = false;
        r.witnesses["partition_ok"] = "|V^-| = " + std::to_string(p.v_minus.size()) +
                                      " differs from |V^+| = " + std::to_string(p.v_plus.size());
        return;
    }
    r.partition_ok = true;
}

inline void eval_cross_order_cond(const TemporalGraph& g, const PartitionInfo& p,
                                  StructureReport& r) {
    std::vector<char> minus(g.node_count(), 0), plus(g.node_count(), 0);
    for (NodeId v : p.v_minus) minus[v] = 1;
    for (NodeId v : p.v_plus) plus[v] = 1;
    for (EdgeId e = 0; e < g.contact_count(); ++e) {
        const Contact& c = g.contact(e);
        bool cross = (minus[c.u] && plus[c.v]) || (plus[c.u] && minus[c.v]);
        if (!cross) continue;
        for (NodeId end : {c.u, c.v}) {
            for (EdgeId f : g.incident(end)) {
                if (f == e) continue;
                if (p.e_minus.contains(f) && g.label(e) < g.label(f)) {
                    r.cross_edge_order_ok = false;
                    r.witnesses["cross_edge_order_ok"] =
                        "cross edge " + g.display(e) + " earlier than adjacent earliest edge " +
                        g.display(f);
                    return;
                }
                if (p.e_plus.contains(f) && g.label(e) > g.label(f)) {
                    r.cross_edge_order_ok = false;
                    r.witnesses["cross_edge_order_ok"] =
                        "cross edge " + g.display(e) + " later than adjacent latest edge " +
                        g.display(f);
                    return;
                }
            }
        }
    }
    r.cross_edge_order_ok = true;
}

// "Between" is strict; the compared edges share endpoints, so their labels are
// pairwise distinct by properness.
inline void eval_label_gap_cond(const TemporalGraph& g, const PartitionInfo& p,
                                StructureReport& r) {
    if (!p.m_minus || !p.m_plus) {
        r.matching_label_gap_ok = false;
        r.witnesses["matching_label_gap_ok"] = "extremal matchings are not well-defined";
        return;
    }
    std::vector<EdgeId> match_at(g.node_count(), -1);
    auto run_side = [&](const std::vector<NodeId>& part,
                        const std::vector<MatchEdge>& matching) -> bool {
        std::fill(match_at.begin(), match_at.end(), -1);
        for (const MatchEdge& m : matching) {
            match_at[m.from] = m.edge;
            match_at[m.to] = m.edge;
        }
        std::vector<char> in_part(g.node_count(), 0);
        for (NodeId v : part) in_part[v] = 1;
        for (EdgeId e = 0; e < g.contact_count(); ++e) {
            const Contact& c = g.contact(e);
            if (!in_part[c.u] || !in_part[c.v]) continue;
            Label a = g.label(match_at[c.u]);
            Label b = g.label(match_at[c.v]);
            if (std::min(a, b) < c.t && c.t < std::max(a, b)) {
                r.matching_label_gap_ok = false;
                r.witnesses["matching_label_gap_ok"] =
                    "edge " + g.display(e) + " lies between incident matching edges " +
                    g.display(match_at[c.u]) + " and " + g.display(match_at[c.v]);
                return false;
            }
        }
        return true;
    };
    if (!run_side(p.v_minus, *p.m_minus)) return;
    if (!run_side(p.v_plus, *p.m_plus)) return;
    r.matching_label_gap_ok = true;
}

}  // namespace detail

// Necessary-and-sufficient test for having no <=2-hop dismountable node:
// condition 1 (partition) and condition 2 (cross edge order).
inline StructureReport check_non_12(const TemporalGraph& g) {
    if (!is_clique(g)) throw std::invalid_argument("check_non_12: not a clique");
    PartitionInfo p = partition(g);
    StructureReport r;
    detail::eval_partition_cond(g, p, r);
    if (r.partition_ok == true) detail::eval_cross_order_cond(g, p, r);
    else r.cross_edge_order_ok = std::nullopt;
    return r;
}

// Adds condition 3 (intra-part labels avoid the matching label gap); the three
// conditions together hold iff no node is k-hop dismountable for any k.
inline StructureReport check_non_123(const TemporalGraph& g) {
    if (!is_clique(g)) throw std::invalid_argument("check_non_123: not a clique");
    PartitionInfo p = partition(g);
    StructureReport r;
    detail::eval_partition_cond(g, p, r);
    if (r.partition_ok == true) {
        detail::eval_cross_order_cond(g, p, r);
        if (r.cross_edge_order_ok == true) detail::eval_label_gap_cond(g, p, r);
    }
    return r;
}

// Reciprocity: the matched cross edge of each node is extremal among its cross
// edges toward the opposite part. Requires the partition condition.
inline StructureReport check_reciprocity(const TemporalGraph& g) {
    if (!is_clique(g)) throw std::invalid_argument("check_reciprocity: not a clique");
    PartitionInfo p = partition(g);
    StructureReport probe;
    detail::eval_partition_cond(g, p, probe);
    if (probe.partition_ok != true)
        throw std::invalid_argument("check_reciprocity: partition condition fails");

    std::vector<char> plus(g.node_count(), 0), minus(g.node_count(), 0);
    for (NodeId v : p.v_plus) plus[v] = 1;
    for (NodeId v : p.v_minus) minus[v] = 1;

    StructureReport r;
    r.reciprocity_ok = true;
    auto fail = [&](const std::string& msg) {
        r.reciprocity_ok = false;
        r.witnesses["reciprocity_ok"] = msg;
    };
    for (NodeId v : p.v_plus) {
        ExtremalInfo e = extremal(g, v);
        NodeId u = e.n_minus;  // u in V^- by definition
        for (EdgeId f : g.incident(u)) {
            if (!plus[g.other_end(f, u)]) continue;
            if (g.label(f) < g.label(e.e_minus)) {
                fail("node " + g.node_name(u) + " has cross edge " + g.display(f) +
                     " earlier than its matched edge " + g.display(e.e_minus));
                return r;
            }
        }
    }
    for (NodeId v : p.v_minus) {
        ExtremalInfo e = extremal(g, v);
        NodeId u = e.n_plus;
        for (EdgeId f : g.incident(u)) {
            if (!minus[g.other_end(f, u)]) continue;
            if (g.label(f) > g.label(e.e_plus)) {
                fail("node " + g.node_name(u) + " has cross edge " + g.display(f) +
                     " later than its matched edge " + g.display(e.e_plus));
                return r;
            }
        }
    }
    return r;
}

// Restriction of a non-{1,2}-hop dismountable clique to its V^- x V^+ cross
// edges, together with the extremal matchings. The restricted graph is always
// temporally connected, and any spanner of it is a spanner of the clique.
struct BicliqueReduction {
    TemporalGraph graph;          // same node set, cross edges only
    std::vector<EdgeId> edge_of;  // restricted edge id -> parent edge id
    std::vector<NodeId> part_minus, part_plus;
    std::vector<MatchEdge> m_minus, m_plus;  // parent edge ids
    EdgeSubset cross;                        // parent edge ids
};

inline BicliqueReduction reduce_to_biclique(const TemporalGraph& g) {
    StructureReport r = check_non_12(g);
    if (!r.passes())
        throw std::invalid_argument(
            "reduce_to_biclique: graph has a {1,2}-hop dismountable node");
    PartitionInfo p = partition(g);
    BicliqueReduction out;
    out.part_minus = p.v_minus;
    out.part_plus = p.v_plus;
    out.m_minus = *p.m_minus;
    out.m_plus = *p.m_plus;

    std::vector<char> plus(g.node_count(), 0);
    for (NodeId v : p.v_plus) plus[v] = 1;
    std::vector<EdgeId> cross_ids;
    for (EdgeId e = 0; e < g.contact_count(); ++e) {
        const Contact& c = g.contact(e);
        if (plus[c.u] != plus[c.v]) cross_ids.push_back(e);
    }
    out.cross = EdgeSubset::of(g, std::move(cross_ids));
    RestrictedGraph rg = restricted(g, out.cross);
    out.graph = std::move(rg.graph);
    out.edge_of = std::move(rg.edge_of);
    return out;
}

}  // namespace tspan
