#pragma once

// Certificate types shared by the spanner constructions: dismount steps,
// bipartite phase logs, pivot trees, and the combined result record.

#include <optional>
#include <vector>

#include "tspan/graph.hpp"

namespace tspan {

// A removable node with its two witness paths. p_minus runs from the removed
// node to some v and ends with v's earliest in-scope edge; p_plus runs from
// some w to the removed node and starts with w's latest in-scope edge.
struct DismountStep {
    NodeId removed = -1;
    int hop_bound = 0;  // max(|p_minus|, |p_plus|)
    std::vector<EdgeId> p_minus;
    std::vector<EdgeId> p_plus;

    int cost() const { return static_cast<int>(p_minus.size() + p_plus.size()); }
};

struct BipartiteEvent {
    enum class Kind { dismount, split };
    Kind kind = Kind::dismount;
    // dismount fields
    NodeId removed = -1;
    NodeId shared = -1;
    EdgeId kept = -1;
    EdgeId dropped = -1;
    // split fields
    std::vector<NodeId> s1, s2;
};

using BipartitePhaseLog = std::vector<BipartiteEvent>;

// Pivot edge plus an in-tree (every node to the pivot traversal) and an
// out-tree (pivot traversal to every node), stored as parent maps. Roots (the
// pivot endpoints) have parent -1.
struct PivotCertificate {
    EdgeId pivot = -1;
    std::vector<NodeId> in_parent;
    std::vector<EdgeId> in_edge;
    std::vector<NodeId> out_parent;
    std::vector<EdgeId> out_edge;

    EdgeSubset spanner_edges(const TemporalGraph& g) const {
        std::vector<EdgeId> ids{pivot};
        for (EdgeId e : in_edge)
            if (e >= 0) ids.push_back(e);
        for (EdgeId e : out_edge)
            if (e >= 0) ids.push_back(e);
        return EdgeSubset::of(g, std::move(ids));
    }
};

struct SpannerResult {
    EdgeSubset edges;
    std::vector<DismountStep> steps;
    std::optional<EdgeId> final_edge;  // the last remaining pair's edge
    BipartitePhaseLog phase;
    std::optional<PivotCertificate> pivot;

    int size() const { return edges.size(); }
};

}  // namespace tspan
