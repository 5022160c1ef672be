#pragma once

// Full spanner construction for temporal cliques: dismount <=kmax-hop nodes
// while any exist (at most 4 edges per step for kmax in {2,3}); once stuck,
// the residual clique is non-{1,2}-hop dismountable, so it reduces to its
// cross-edge bi-clique, which the split recursion spans in O(n log n) edges.

#include <optional>
#include <stdexcept>
#include <vector>

#include "tspan/bipartite.hpp"
#include "tspan/dismount.hpp"
#include "tspan/structure.hpp"

namespace tspan {

inline SpannerResult clique_spanner(const TemporalGraph& g, int kmax_dismount = 2) {
    if (!is_clique(g)) throw std::invalid_argument("clique_spanner: not a clique");
    if (g.node_count() < 1) throw std::invalid_argument("clique_spanner: empty graph");
    if (kmax_dismount < 2)
        throw std::invalid_argument(
            "clique_spanner: kmax below 2 cannot justify the bi-clique reduction");

    SpannerResult out;
    std::vector<EdgeId> ids;
    auto scope = detail::scope_nodes(g, std::nullopt);
    while (scope.size() > 2) {
        auto step = find_k_hop(g, scope, kmax_dismount);
        if (!step) break;
        auto [next_scope, selected] = apply_dismount(g, scope, *step);
        ids.insert(ids.end(), selected.ids.begin(), selected.ids.end());
        out.steps.push_back(*step);
        scope = std::move(next_scope);
    }

    if (scope.size() <= 1) {
        out.edges = EdgeSubset::of(g, std::move(ids));
        return out;
    }
    if (scope.size() == 2) {
        EdgeId last = *g.edge_between(scope[0], scope[1]);
        ids.push_back(last);
        out.final_edge = last;
        out.edges = EdgeSubset::of(g, std::move(ids));
        return out;
    }

    // stuck above 2 nodes: bipartite phase on the residual clique
    InducedGraph res = induced(g, scope);
    BicliqueReduction red = reduce_to_biclique(res.graph);
    SpannerResult bip = full_biclique_spanner(res.graph, red);
    for (EdgeId e : bip.edges.ids) ids.push_back(res.edge_of[e]);
    // phase log events carry residual-graph node/edge ids; remap to the parent
    for (BipartiteEvent ev : bip.phase) {
        if (ev.kind == BipartiteEvent::Kind::dismount) {
            ev.removed = res.node_of[ev.removed];
            ev.shared = res.node_of[ev.shared];
            ev.kept = res.edge_of[ev.kept];
            ev.dropped = res.edge_of[ev.dropped];
        } else {
            for (NodeId& v : ev.s1) v = res.node_of[v];
            for (NodeId& v : ev.s2) v = res.node_of[v];
        }
        out.phase.push_back(std::move(ev));
    }
    out.edges = EdgeSubset::of(g, std::move(ids));
    return out;
}

}  // namespace tspan
