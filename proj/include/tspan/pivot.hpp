#pragma once

// Pivot edges, label compression, and full-range labelings.
//
// A pivot edge e can be reached by every node via a temporal path arriving by
// time lambda(e) and reaches every node via a temporal path departing at or
// after lambda(e); the in-tree toward e, the out-tree from e, and e itself
// form a spanner of at most 2n-3 edges.
//
// Compression rewrites labels to the smallest values preserving the local
// order among adjacent edges; a compressed graph whose lifetime equals its
// edge count is full-range (each label 1..|E| used exactly once, consecutive
// labels on adjacent edges).

#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tspan/certificates.hpp"
#include "tspan/graph.hpp"
#include "tspan/reach.hpp"

namespace tspan {

// Checks one edge for pivotability and builds the witness trees. The in-tree
// sweep scans contacts in decreasing label order maintaining latest-departure
// reachability toward the endpoints; the out-tree sweep scans increasing
// labels from lambda(e) with earliest arrivals. Neither sweep may reuse e:
// witness paths traverse it exactly once.
inline std::optional<PivotCertificate> check_pivot(const TemporalGraph& g, EdgeId e) {
    const int n = g.node_count();
    const Contact& piv = g.contact(e);
    const Label t = piv.t;

    PivotCertificate cert;
    cert.pivot = e;
    cert.in_parent.assign(n, -1);
    cert.in_edge.assign(n, -1);
    cert.out_parent.assign(n, -1);
    cert.out_edge.assign(n, -1);

    constexpr Label kNone = std::numeric_limits<Label>::min();
    std::vector<Label> depart(n, kNone);  // latest departure reaching an endpoint by t
    depart[piv.u] = std::numeric_limits<Label>::max();
    depart[piv.v] = std::numeric_limits<Label>::max();
    for (EdgeId f = g.contact_count() - 1; f >= 0; --f) {
        if (f == e) continue;
        const Contact& c = g.contact(f);
        if (c.t > t) continue;
        if (depart[c.v] >= c.t && depart[c.u] < c.t) {
            depart[c.u] = c.t;
            cert.in_parent[c.u] = c.v;
            cert.in_edge[c.u] = f;
        }
        if (depart[c.u] >= c.t && depart[c.v] < c.t) {
            depart[c.v] = c.t;
            cert.in_parent[c.v] = c.u;
            cert.in_edge[c.v] = f;
        }
    }

    constexpr Label kFar = std::numeric_limits<Label>::max();
    std::vector<Label> arrive(n, kFar);  // earliest arrival departing e at t
    arrive[piv.u] = t;
    arrive[piv.v] = t;
    for (EdgeId f = 0; f < g.contact_count(); ++f) {
        if (f == e) continue;
        const Contact& c = g.contact(f);
        if (c.t < t) continue;
        if (arrive[c.u] <= c.t && arrive[c.v] > c.t) {
            arrive[c.v] = c.t;
            cert.out_parent[c.v] = c.u;
            cert.out_edge[c.v] = f;
        }
        if (arrive[c.v] <= c.t && arrive[c.u] > c.t) {
            arrive[c.u] = c.t;
            cert.out_parent[c.u] = c.v;
            cert.out_edge[c.u] = f;
        }
    }

    for (NodeId v = 0; v < n; ++v) {
        if (depart[v] == kNone || arrive[v] == kFar) return std::nullopt;
    }
    return cert;
}

// First pivot edge in label order, with its trees; none when no edge
// qualifies.
inline std::optional<PivotCertificate> find_pivot(const TemporalGraph& g) {
    if (!is_temporally_connected(g))
        throw std::invalid_argument("find_pivot: graph is not temporally connected");
    for (EdgeId e = 0; e < g.contact_count(); ++e) {
        auto cert = check_pivot(g, e);
        if (cert) return cert;
    }
    return std::nullopt;
}

inline SpannerResult pivot_spanner(const TemporalGraph& g, const PivotCertificate& cert) {
    SpannerResult out;
    out.edges = cert.spanner_edges(g);
    out.pivot = cert;
    return out;
}

struct CompressedGraph {
    TemporalGraph graph;
    std::vector<EdgeId> edge_of;  // compressed edge id -> original edge id
};

// Smallest labels preserving the order among adjacent edges: processing edges
// by increasing original label, each gets 1 plus the largest new label among
// adjacent earlier edges (1 when there is none). Labels are normalized to
// start at 1.
inline CompressedGraph compress(const TemporalGraph& g) {
    const int m = g.contact_count();
    std::vector<Label> fresh(m, 0);
    for (EdgeId e = 0; e < m; ++e) {  // contacts are sorted by label
        const Contact& c = g.contact(e);
        Label best = 0;
        for (NodeId end : {c.u, c.v}) {
            for (EdgeId f : g.incident(end)) {
                if (f == e || g.label(f) >= c.t) continue;
                if (fresh[f] > best) best = fresh[f];
            }
        }
        fresh[e] = best + 1;
    }
    GraphBuilder b;
    for (NodeId v = 0; v < g.node_count(); ++v) b.add_node(g.node_name(v));
    for (EdgeId e = 0; e < m; ++e) {
        const Contact& c = g.contact(e);
        b.add_contact(g.node_name(c.u), g.node_name(c.v), fresh[e]);
    }
    CompressedGraph out{b.build(), std::vector<EdgeId>(m, -1)};
    for (EdgeId ce = 0; ce < m; ++ce) {
        const Contact& c = out.graph.contact(ce);
        out.edge_of[ce] = *g.edge_between(c.u, c.v);
    }
    return out;
}

// True iff the compressed image uses every label 1..|E| exactly once. The
// input itself is never mutated; non-compressed inputs are judged by their
// compressed image.
inline bool is_full_range(const TemporalGraph& g) {
    if (g.contact_count() == 0) return true;
    CompressedGraph c = compress(g);
    return c.graph.max_label() == c.graph.contact_count();
}

namespace detail {

inline bool fullrange_labels_in_place(const TemporalGraph& g) {
    if (g.contact_count() == 0) return true;
    std::vector<char> used(g.contact_count() + 1, 0);
    for (const Contact& c : g.contacts()) {
        if (c.t < 1 || c.t > g.contact_count() || used[c.t]) return false;
        used[c.t] = 1;
    }
    return true;
}

}  // namespace detail

// Witness that the endpoints of e reach f by time lambda(f) in a full-range
// graph: consecutive labels sit on adjacent edges, so a walk is grown label by
// label from e to f, either appending the next edge or swapping it for the
// last one; loops are then cut out. The returned contact sequence is a simple
// temporal path starting at an endpoint of e and ending by traversing f.
inline std::vector<EdgeId> fullrange_reach(const TemporalGraph& g, EdgeId e, EdgeId f) {
    if (!detail::fullrange_labels_in_place(g) || !is_full_range(g))
        throw std::invalid_argument("fullrange_reach: graph is not full-range");
    if (g.label(e) >= g.label(f))
        throw std::invalid_argument("fullrange_reach: need lambda(e) < lambda(f)");

    // labels are 1..m, each on exactly one edge, and ids are label-sorted
    const Label te = g.label(e), tf = g.label(f);
    std::vector<NodeId> walk;
    std::vector<EdgeId> walk_edges;
    {
        const Contact& c0 = g.contact(e);
        const Contact& c1 = g.contact(static_cast<EdgeId>(te));  // label te+1
        NodeId shared = (c1.u == c0.u || c1.v == c0.u) ? c0.u : c0.v;
        walk = {g.other_end(e, shared), shared};
        walk_edges = {e};
    }
    for (Label t = te + 1; t <= tf; ++t) {
        EdgeId next = static_cast<EdgeId>(t - 1);  // edge labeled t
        const Contact& c = g.contact(next);
        NodeId end = walk.back();
        if (c.u == end || c.v == end) {
            walk.push_back(g.other_end(next, end));
            walk_edges.push_back(next);
        } else {
            // the shared node with the previous label is the penultimate one
            walk.pop_back();
            walk_edges.pop_back();
            walk.push_back(g.other_end(next, walk.back()));
            walk_edges.push_back(next);
        }
    }
    // cut loops; the result is a simple temporal path ending at an endpoint
    // of f (labels along the walk increase strictly, so any cut is valid)
    std::vector<NodeId> path{walk[0]};
    std::vector<EdgeId> path_edges;
    for (size_t i = 0; i < walk_edges.size(); ++i) {
        NodeId nxt = walk[i + 1];
        auto seen = std::find(path.begin(), path.end(), nxt);
        if (seen != path.end()) {
            path_edges.resize(seen - path.begin());
            path.resize(seen - path.begin() + 1);
        } else {
            path.push_back(nxt);
            path_edges.push_back(walk_edges[i]);
        }
    }
    if (!path_edges.empty() && path_edges.back() == f) return path_edges;
    // the cut dropped f; re-attach it from whichever endpoint the path holds
    NodeId other = g.other_end(f, path.back());
    auto at = std::find(path.begin(), path.end(), other);
    if (at != path.end()) {
        path_edges.resize(at - path.begin());
        path.resize(at - path.begin() + 1);
    }
    path_edges.push_back(f);
    return path_edges;
}

}  // namespace tspan
