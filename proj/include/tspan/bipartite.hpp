#pragma once

// One-sided dismountability and the split recursion for complete bipartite
// instances. The objective is one-directional: every source must reach every
// target within the selected edges. While the target part is larger than the
// source part, two targets share their latest source-neighbor s; the one whose
// shared edge has the larger label delegates its receptions to the other and
// is dismounted at the cost of both edges. Once balanced, the source part is
// split in half and both halves recurse on the full remaining target set,
// which solves size(n) <= 2*size(n/2) + O(n).

#include <optional>
#include <stdexcept>
#include <vector>

#include "tspan/certificates.hpp"
#include "tspan/graph.hpp"
#include "tspan/structure.hpp"

namespace tspan {

// Source part, target part, and the labels on their cross edges (taken from
// the backing graph, which must contain every S x T pair).
struct BipartiteInstance {
    std::vector<NodeId> sources, targets;  // kept in node order

    static BipartiteInstance over(const TemporalGraph& g, std::vector<NodeId> sources,
                                  std::vector<NodeId> targets) {
        std::sort(sources.begin(), sources.end());
        std::sort(targets.begin(), targets.end());
        std::vector<char> src(g.node_count(), 0);
        for (NodeId s : sources) src.at(s) = 1;
        for (NodeId t : targets)
            if (src.at(t)) throw std::invalid_argument("bipartite: parts overlap");
        for (NodeId s : sources)
            for (NodeId t : targets)
                if (!g.edge_between(s, t))
                    throw std::invalid_argument("bipartite: missing cross edge " +
                                                g.node_name(s) + "-" + g.node_name(t));
        return BipartiteInstance{std::move(sources), std::move(targets)};
    }
};

struct OneSidedDismount {
    NodeId removed = -1;  // the target with the later shared edge
    NodeId shared = -1;   // the coinciding latest source-neighbor
    EdgeId kept = -1;
    EdgeId dropped = -1;
};

// Finds two targets whose latest source-neighbor coincides (pigeonhole when
// |T| > |S|); deterministic: smallest shared source in node order, then the
// two smallest qualifying targets. None when |T| <= |S|.
inline std::optional<OneSidedDismount> one_sided_dismount(const TemporalGraph& g,
                                                          const std::vector<NodeId>& sources,
                                                          const std::vector<NodeId>& targets) {
    if (sources.empty() || targets.empty())
        throw std::invalid_argument("one_sided_dismount: empty part");
    if (targets.size() <= sources.size()) return std::nullopt;

    std::vector<std::vector<NodeId>> by_source(g.node_count());
    for (NodeId t : targets) {  // node order
        NodeId best_s = -1;
        Label best_t = -1;
        for (NodeId s : sources) {
            EdgeId e = *g.edge_between(s, t);
            if (g.label(e) > best_t) {
                best_t = g.label(e);
                best_s = s;
            }
        }
        by_source[best_s].push_back(t);
    }
    for (NodeId s : sources) {
        if (by_source[s].size() < 2) continue;
        NodeId ta = by_source[s][0], tb = by_source[s][1];
        EdgeId ea = *g.edge_between(s, ta), eb = *g.edge_between(s, tb);
        OneSidedDismount d;
        d.shared = s;
        if (g.label(ea) < g.label(eb)) {
            d.kept = ea;
            d.dropped = eb;
            d.removed = tb;
        } else {
            d.kept = eb;
            d.dropped = ea;
            d.removed = ta;
        }
        return d;
    }
    return std::nullopt;  // unreachable when |T| > |S|
}

namespace detail {

inline void bipartite_solve(const TemporalGraph& g, std::vector<NodeId> sources,
                            std::vector<NodeId> targets, std::vector<EdgeId>& selected,
                            BipartitePhaseLog& log) {
    while (targets.size() > sources.size()) {
        auto d = one_sided_dismount(g, sources, targets);
        selected.push_back(d->kept);
        selected.push_back(d->dropped);
        BipartiteEvent ev;
        ev.kind = BipartiteEvent::Kind::dismount;
        ev.removed = d->removed;
        ev.shared = d->shared;
        ev.kept = d->kept;
        ev.dropped = d->dropped;
        log.push_back(ev);
        targets.erase(std::find(targets.begin(), targets.end(), d->removed));
    }
    if (sources.size() == 1) {
        for (NodeId t : targets) selected.push_back(*g.edge_between(sources[0], t));
        return;
    }
    size_t half = (sources.size() + 1) / 2;
    std::vector<NodeId> s1(sources.begin(), sources.begin() + half);
    std::vector<NodeId> s2(sources.begin() + half, sources.end());
    BipartiteEvent ev;
    ev.kind = BipartiteEvent::Kind::split;
    ev.s1 = s1;
    ev.s2 = s2;
    log.push_back(ev);
    bipartite_solve(g, std::move(s1), targets, selected, log);
    bipartite_solve(g, std::move(s2), std::move(targets), selected, log);
}

}  // namespace detail

// Selected cross edges granting s -> t reachability for every source s and
// every original target t, plus the phase log. Duplicate selections across
// recursion branches are deduplicated in the subset but kept in the log.
inline std::pair<EdgeSubset, BipartitePhaseLog> bipartite_spanner(
    const TemporalGraph& g, const BipartiteInstance& inst) {
    if (inst.sources.empty() || inst.targets.empty())
        throw std::invalid_argument("bipartite_spanner: empty part");
    std::vector<EdgeId> selected;
    BipartitePhaseLog log;
    detail::bipartite_solve(g, inst.sources, inst.targets, selected, log);
    return {EdgeSubset::of(g, std::move(selected)), std::move(log)};
}

// Full spanner of the clique behind a bi-clique reduction: the one-directional
// bipartite spanner from V^+ to V^-, joined with both extremal matchings.
inline SpannerResult full_biclique_spanner(const TemporalGraph& g,
                                           const BicliqueReduction& red) {
    auto inst = BipartiteInstance::over(g, red.part_plus, red.part_minus);
    auto [picked, log] = bipartite_spanner(g, inst);
    std::vector<EdgeId> ids = picked.ids;
    for (const MatchEdge& m : red.m_minus) ids.push_back(m.edge);
    for (const MatchEdge& m : red.m_plus) ids.push_back(m.edge);
    SpannerResult out;
    out.edges = EdgeSubset::of(g, std::move(ids));
    out.phase = std::move(log);
    return out;
}

}  // namespace tspan
