#pragma once

// JSON views of certificates and reports. Contacts serialize as [u, v, t]
// triples with node names; object key order is fixed so identical inputs give
// byte-identical documents.

#include <string>

#include "json.hpp"
#include "tspan/certificates.hpp"
#include "tspan/dismount.hpp"
#include "tspan/graph.hpp"
#include "tspan/structure.hpp"

namespace tspan {

using ojson = nlohmann::ordered_json;

inline ojson contact_json(const TemporalGraph& g, EdgeId e) {
    const Contact& c = g.contact(e);
    return ojson::array({g.node_name(c.u), g.node_name(c.v), c.t});
}

inline ojson subset_json(const TemporalGraph& g, const EdgeSubset& s) {
    ojson out = ojson::array();
    for (EdgeId e : s.ids) out.push_back(contact_json(g, e));
    return out;
}

inline ojson step_json(const TemporalGraph& g, const DismountStep& step) {
    ojson out;
    out["removed"] = g.node_name(step.removed);
    out["k"] = step.hop_bound;
    out["cost"] = step.cost();
    ojson pm = ojson::array(), pp = ojson::array();
    for (EdgeId e : step.p_minus) pm.push_back(contact_json(g, e));
    for (EdgeId e : step.p_plus) pp.push_back(contact_json(g, e));
    out["p_minus"] = std::move(pm);
    out["p_plus"] = std::move(pp);
    return out;
}

inline ojson phase_json(const TemporalGraph& g, const BipartitePhaseLog& log) {
    ojson out = ojson::array();
    for (const BipartiteEvent& ev : log) {
        ojson e;
        if (ev.kind == BipartiteEvent::Kind::dismount) {
            e["event"] = "dismount";
            e["removed"] = g.node_name(ev.removed);
            e["shared"] = g.node_name(ev.shared);
            e["kept"] = contact_json(g, ev.kept);
            e["dropped"] = contact_json(g, ev.dropped);
        } else {
            e["event"] = "split";
            ojson s1 = ojson::array(), s2 = ojson::array();
            for (NodeId v : ev.s1) s1.push_back(g.node_name(v));
            for (NodeId v : ev.s2) s2.push_back(g.node_name(v));
            e["s1"] = std::move(s1);
            e["s2"] = std::move(s2);
        }
        out.push_back(std::move(e));
    }
    return out;
}

inline ojson pivot_json(const TemporalGraph& g, const PivotCertificate& cert) {
    ojson out;
    out["edge"] = contact_json(g, cert.pivot);
    ojson in = ojson::array(), outt = ojson::array();
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (cert.in_parent[v] >= 0)
            in.push_back(ojson{{"node", g.node_name(v)},
                               {"next", g.node_name(cert.in_parent[v])},
                               {"via", contact_json(g, cert.in_edge[v])}});
        if (cert.out_parent[v] >= 0)
            outt.push_back(ojson{{"node", g.node_name(v)},
                                 {"next", g.node_name(cert.out_parent[v])},
                                 {"via", contact_json(g, cert.out_edge[v])}});
    }
    out["in_tree"] = std::move(in);
    out["out_tree"] = std::move(outt);
    return out;
}

inline ojson certificate_json(const TemporalGraph& g, const SpannerResult& r) {
    ojson out;
    ojson steps = ojson::array();
    for (const DismountStep& s : r.steps) steps.push_back(step_json(g, s));
    out["steps"] = std::move(steps);
    out["phase"] = phase_json(g, r.phase);
    out["final_edge"] = r.final_edge ? contact_json(g, *r.final_edge) : ojson(nullptr);
    out["pivot"] = r.pivot ? pivot_json(g, *r.pivot) : ojson(nullptr);
    out["edges"] = subset_json(g, r.edges);
    out["size"] = r.size();
    return out;
}

inline ojson partition_json(const TemporalGraph& g, const PartitionInfo& p) {
    auto names = [&](const std::vector<NodeId>& vs) {
        ojson a = ojson::array();
        for (NodeId v : vs) a.push_back(g.node_name(v));
        return a;
    };
    auto matching = [&](const std::optional<std::vector<MatchEdge>>& m) -> ojson {
        if (!m) return nullptr;
        ojson a = ojson::array();
        for (const MatchEdge& e : *m)
            a.push_back(ojson{{"from", g.node_name(e.from)},
                              {"to", g.node_name(e.to)},
                              {"t", g.label(e.edge)}});
        return a;
    };
    ojson out;
    out["v_minus"] = names(p.v_minus);
    out["v_plus"] = names(p.v_plus);
    out["v_zero"] = names(p.v_zero);
    out["m_minus"] = matching(p.m_minus);
    out["m_plus"] = matching(p.m_plus);
    return out;
}

inline ojson structure_json(const StructureReport& r) {
    auto flag = [](const std::optional<bool>& f) -> ojson {
        if (!f) return nullptr;
        return *f;
    };
    ojson out;
    out["partition_ok"] = flag(r.partition_ok);
    out["cross_edge_order_ok"] = flag(r.cross_edge_order_ok);
    out["matching_label_gap_ok"] = flag(r.matching_label_gap_ok);
    out["reciprocity_ok"] = flag(r.reciprocity_ok);
    ojson wit;
    for (const auto& [k, v] : r.witnesses) wit[k] = v;
    out["witnesses"] = std::move(wit);
    return out;
}

}  // namespace tspan
