#pragma once

// Temporal graph core: a node set plus uniquely labeled undirected contacts.
// Labelings are simple (one label per edge) and proper (adjacent edges carry
// distinct labels); both are enforced at construction.
//
// Edge-list text format: one contact per line, "<u> <v> <t>", '#' starts a
// comment, blank lines ignored. Serialization emits contacts sorted by label.

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tspan {

using NodeId = int;
using EdgeId = int;
using Label = long long;

struct Contact {
    NodeId u = -1;  // normalized: u < v
    NodeId v = -1;
    Label t = 0;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
          line(line_no) {}
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class TemporalGraph {
  public:
    TemporalGraph() = default;

    int node_count() const { return static_cast<int>(names_.size()); }
    int contact_count() const { return static_cast<int>(contacts_.size()); }

    const std::string& node_name(NodeId v) const { return names_.at(v); }
    const std::vector<std::string>& node_names() const { return names_; }

    std::optional<NodeId> find_node(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Contacts sorted by (label, endpoints); edge ids index into this order.
    const std::vector<Contact>& contacts() const { return contacts_; }
    const Contact& contact(EdgeId e) const { return contacts_.at(e); }
    Label label(EdgeId e) const { return contacts_.at(e).t; }

    // Edge ids incident to v, sorted by label.
    const std::vector<EdgeId>& incident(NodeId v) const { return incident_.at(v); }

    std::optional<EdgeId> edge_between(NodeId a, NodeId b) const {
        if (a == b) return std::nullopt;
        if (a > b) std::swap(a, b);
        auto it = edge_ids_.find({a, b});
        if (it == edge_ids_.end()) return std::nullopt;
        return it->second;
    }

    NodeId other_end(EdgeId e, NodeId v) const {
        const Contact& c = contacts_.at(e);
        return c.u == v ? c.v : c.u;
    }

    Label min_label() const { return contacts_.front().t; }
    Label max_label() const { return contacts_.back().t; }

    std::string display(EdgeId e) const {
        const Contact& c = contacts_.at(e);
        return names_[c.u] + "-" + names_[c.v] + "@" + std::to_string(c.t);
    }

    void write_edge_list(std::ostream& out) const {
        for (const Contact& c : contacts_)
            out << names_[c.u] << ' ' << names_[c.v] << ' ' << c.t << '\n';
    }

    std::string edge_list_string() const {
        std::ostringstream out;
        write_edge_list(out);
        return out.str();
    }

    bool operator==(const TemporalGraph& o) const {
        return names_ == o.names_ && contacts_size_eq(o);
    }

  private:
    bool contacts_size_eq(const TemporalGraph& o) const {
        if (contacts_.size() != o.contacts_.size()) return false;
        for (size_t i = 0; i < contacts_.size(); ++i) {
            if (contacts_[i].u != o.contacts_[i].u || contacts_[i].v != o.contacts_[i].v ||
                contacts_[i].t != o.contacts_[i].t)
                return false;
        }
        return true;
    }

    friend class GraphBuilder;
    std::vector<std::string> names_;
    std::map<std::string, NodeId> index_;
    std::vector<Contact> contacts_;
    std::vector<std::vector<EdgeId>> incident_;
    std::map<std::pair<NodeId, NodeId>, EdgeId> edge_ids_;
};

class GraphBuilder {
  public:
    NodeId add_node(const std::string& name) {
        auto it = g_.index_.find(name);
        if (it != g_.index_.end()) return it->second;
        NodeId id = static_cast<NodeId>(g_.names_.size());
        g_.names_.push_back(name);
        g_.index_.emplace(name, id);
        return id;
    }

    GraphBuilder& add_contact(const std::string& u, const std::string& v, Label t) {
        NodeId a = add_node(u);
        NodeId b = add_node(v);
        raw_.push_back({a, b, t});
        return *this;
    }

    // Validates: no self-loops, one contact per pair (simple), distinct labels
    // on adjacent edges (proper), non-negative labels. Throws ValidationError
    // listing every offending contact.
    TemporalGraph build() {
        std::vector<std::string> problems;
        std::map<std::pair<NodeId, NodeId>, Label> seen;
        std::vector<Contact> kept;
        for (const Contact& r : raw_) {
            if (r.u == r.v) {
                problems.push_back("self-loop at node " + g_.names_[r.u]);
                continue;
            }
            if (r.t < 0) {
                problems.push_back("negative label on edge " + pair_name(r.u, r.v));
                continue;
            }
            Contact c = r;
            if (c.u > c.v) std::swap(c.u, c.v);
            auto [it, fresh] = seen.emplace(std::make_pair(c.u, c.v), c.t);
            if (!fresh) {
                problems.push_back("duplicate edge " + pair_name(c.u, c.v) +
                                   " (labels " + std::to_string(it->second) + " and " +
                                   std::to_string(c.t) + ")");
                continue;
            }
            kept.push_back(c);
        }
        // proper labeling: adjacent edges must have distinct labels
        std::vector<std::vector<std::pair<Label, const Contact*>>> at(g_.names_.size());
        for (const Contact& c : kept) {
            at[c.u].push_back({c.t, &c});
            at[c.v].push_back({c.t, &c});
        }
        for (NodeId v = 0; v < static_cast<NodeId>(at.size()); ++v) {
            auto& lst = at[v];
            std::sort(lst.begin(), lst.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (size_t i = 1; i < lst.size(); ++i) {
                if (lst[i].first == lst[i - 1].first) {
                    const Contact* a = lst[i - 1].second;
                    const Contact* b = lst[i].second;
                    problems.push_back("proper labeling violated at node " + g_.names_[v] +
                                       ": edges " + pair_name(a->u, a->v) + " and " +
                                       pair_name(b->u, b->v) + " both labeled " +
                                       std::to_string(lst[i].first));
                }
            }
        }
        if (!problems.empty()) {
            std::string msg;
            for (size_t i = 0; i < problems.size(); ++i) {
                if (i) msg += "; ";
                msg += problems[i];
            }
            throw ValidationError(msg);
        }

        std::sort(kept.begin(), kept.end(), [](const Contact& a, const Contact& b) {
            if (a.t != b.t) return a.t < b.t;
            if (a.u != b.u) return a.u < b.u;
            return a.v < b.v;
        });
        g_.contacts_ = std::move(kept);
        g_.incident_.assign(g_.names_.size(), {});
        for (EdgeId e = 0; e < static_cast<EdgeId>(g_.contacts_.size()); ++e) {
            const Contact& c = g_.contacts_[e];
            g_.incident_[c.u].push_back(e);
            g_.incident_[c.v].push_back(e);
            g_.edge_ids_.emplace(std::make_pair(c.u, c.v), e);
        }
        return std::move(g_);
    }

  private:
    std::string pair_name(NodeId a, NodeId b) const {
        return g_.names_[a] + "-" + g_.names_[b];
    }
    TemporalGraph g_;
    std::vector<Contact> raw_;
};

inline TemporalGraph parse_graph(std::istream& in) {
    GraphBuilder b;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string u, v, t_tok;
        if (!(fields >> u)) continue;  // blank line
        if (!(fields >> v >> t_tok))
            throw ParseError(line_no, "expected \"<u> <v> <t>\"");
        std::string extra;
        if (fields >> extra)
            throw ParseError(line_no, "trailing token \"" + extra + "\"");
        if (t_tok.empty() || t_tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(line_no, "label \"" + t_tok + "\" is not a non-negative integer");
        Label t = 0;
        try {
            t = std::stoll(t_tok);
        } catch (const std::exception&) {
            throw ParseError(line_no, "label \"" + t_tok + "\" out of range");
        }
        b.add_contact(u, v, t);
    }
    return b.build();
}

inline TemporalGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

// Membership set over the contacts of a parent graph. Ids are kept sorted and
// unique; construction validates that every member exists in the parent.
struct EdgeSubset {
    std::vector<EdgeId> ids;

    static EdgeSubset of(const TemporalGraph& g, std::vector<EdgeId> ids) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (EdgeId e : ids) {
            if (e < 0 || e >= g.contact_count())
                throw ValidationError("edge id " + std::to_string(e) + " not in graph");
        }
        return EdgeSubset{std::move(ids)};
    }

    static EdgeSubset all(const TemporalGraph& g) {
        std::vector<EdgeId> v(g.contact_count());
        for (int i = 0; i < g.contact_count(); ++i) v[i] = i;
        return EdgeSubset{std::move(v)};
    }

    bool contains(EdgeId e) const {
        return std::binary_search(ids.begin(), ids.end(), e);
    }
    int size() const { return static_cast<int>(ids.size()); }

    EdgeSubset unite(const EdgeSubset& o) const {
        std::vector<EdgeId> merged;
        merged.reserve(ids.size() + o.ids.size());
        std::set_union(ids.begin(), ids.end(), o.ids.begin(), o.ids.end(),
                       std::back_inserter(merged));
        return EdgeSubset{std::move(merged)};
    }

    bool operator==(const EdgeSubset&) const = default;
};

inline bool is_clique(const TemporalGraph& g) {
    long long n = g.node_count();
    return static_cast<long long>(g.contact_count()) == n * (n - 1) / 2;
}

// Complete bipartite over the given parts, with no intra-part edges. The two
// parts must be disjoint and cover the node set.
inline bool is_biclique(const TemporalGraph& g, const std::vector<NodeId>& part_a,
                        const std::vector<NodeId>& part_b) {
    std::vector<int> side(g.node_count(), 0);
    for (NodeId v : part_a) side.at(v) = 1;
    for (NodeId v : part_b) {
        if (side.at(v) == 1) return false;  // overlap
        side[v] = 2;
    }
    for (int s : side)
        if (s == 0) return false;  // not covered
    for (const Contact& c : g.contacts())
        if (side[c.u] == side[c.v]) return false;
    return static_cast<long long>(g.contact_count()) ==
           static_cast<long long>(part_a.size()) * static_cast<long long>(part_b.size());
}

// Node-induced subgraph; node ids are renumbered, mappings go back to the
// parent.
struct InducedGraph {
    TemporalGraph graph;
    std::vector<NodeId> node_of;  // new id -> parent id
    std::vector<EdgeId> edge_of;  // new id -> parent id
};

inline InducedGraph induced(const TemporalGraph& g, const std::vector<NodeId>& nodes) {
    std::vector<char> keep(g.node_count(), 0);
    GraphBuilder b;
    std::vector<NodeId> order;
    // nodes kept in parent order, whatever order was given
    std::vector<NodeId> sorted(nodes);
    std::sort(sorted.begin(), sorted.end());
    for (NodeId v : sorted) {
        keep.at(v) = 1;
        b.add_node(g.node_name(v));
        order.push_back(v);
    }
    std::vector<EdgeId> edge_origin;
    for (EdgeId e = 0; e < g.contact_count(); ++e) {
        const Contact& c = g.contact(e);
        if (keep[c.u] && keep[c.v]) {
            b.add_contact(g.node_name(c.u), g.node_name(c.v), c.t);
            edge_origin.push_back(e);
        }
    }
    InducedGraph out{b.build(), std::move(order), {}};
    // builder re-sorts contacts identically (same label order), so edge ids map
    // one-to-one in label order
    out.edge_of = std::move(edge_origin);
    return out;
}

// Edge-restricted copy; node set and node ids are unchanged.
struct RestrictedGraph {
    TemporalGraph graph;
    std::vector<EdgeId> edge_of;  // new id -> parent id
};

inline RestrictedGraph restricted(const TemporalGraph& g, const EdgeSubset& s) {
    GraphBuilder b;
    for (NodeId v = 0; v < g.node_count(); ++v) b.add_node(g.node_name(v));
    for (EdgeId e : s.ids) {
        const Contact& c = g.contact(e);
        b.add_contact(g.node_name(c.u), g.node_name(c.v), c.t);
    }
    return RestrictedGraph{b.build(), s.ids};
}

// Maps every contact of `other` onto the identical contact of `parent` (same
// endpoint names, same label). Throws when a contact has no counterpart.
inline EdgeSubset match_contacts(const TemporalGraph& parent, const TemporalGraph& other) {
    std::vector<EdgeId> ids;
    for (EdgeId oe = 0; oe < other.contact_count(); ++oe) {
        const Contact& c = other.contact(oe);
        auto a = parent.find_node(other.node_name(c.u));
        auto b = parent.find_node(other.node_name(c.v));
        std::optional<EdgeId> e;
        if (a && b) e = parent.edge_between(*a, *b);
        if (!e || parent.label(*e) != c.t)
            throw ValidationError("contact " + other.display(oe) + " not in parent graph");
        ids.push_back(*e);
    }
    return EdgeSubset::of(parent, std::move(ids));
}

}  // namespace tspan
