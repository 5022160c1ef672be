#include "doctest.h"
#include "helpers.hpp"
#include "tspan/dismount.hpp"
#include "tspan/fixtures.hpp"
#include "tspan/oracle.hpp"
#include "tspan/reach.hpp"
#include "tspan/structure.hpp"

using namespace tspan;

namespace {

NodeId node(const TemporalGraph& g, const char* name) { return *g.find_node(name); }

std::vector<std::string> names(const TemporalGraph& g, const std::vector<NodeId>& vs) {
    std::vector<std::string> out;
    for (NodeId v : vs) out.push_back(g.node_name(v));
    return out;
}

std::vector<std::string> matched_labels(const TemporalGraph& g,
                                        const std::vector<MatchEdge>& m) {
    std::vector<std::string> out;
    for (const MatchEdge& e : m)
        out.push_back(g.node_name(e.from) + "-" + g.node_name(e.to) + "@" +
                      std::to_string(g.label(e.edge)));
    return out;
}

}  // namespace

TEST_CASE("partition of fig12") {
    TemporalGraph g = fixture("fig12_k8");
    PartitionInfo p = partition(g);
    CHECK(names(g, p.v_minus) == std::vector<std::string>{"0", "1", "2", "3"});
    CHECK(names(g, p.v_plus) == std::vector<std::string>{"4", "5", "6", "7"});
    CHECK(p.v_zero.empty());
    REQUIRE(p.m_minus.has_value());
    REQUIRE(p.m_plus.has_value());
    CHECK(matched_labels(g, *p.m_minus) ==
          std::vector<std::string>{"4-0@8", "5-2@9", "6-3@7", "7-1@6"});
    CHECK(matched_labels(g, *p.m_plus) ==
          std::vector<std::string>{"0-6@19", "1-5@18", "2-7@21", "3-4@20"});
}

TEST_CASE("partition of fig2 overlaps") {
    TemporalGraph g = fixture("fig2_k5");
    PartitionInfo p = partition(g);
    CHECK(names(g, p.v_minus) == std::vector<std::string>{"a", "b"});
    CHECK(names(g, p.v_plus) == std::vector<std::string>{"a", "d", "e"});
    CHECK(names(g, p.v_zero) == std::vector<std::string>{"c"});
    CHECK_FALSE(p.m_minus.has_value());
    CHECK_FALSE(p.m_plus.has_value());
}

TEST_CASE("partition of k4_min") {
    TemporalGraph g = fixture("k4_min");
    PartitionInfo p = partition(g);
    CHECK(names(g, p.v_minus) == std::vector<std::string>{"1", "2"});
    CHECK(names(g, p.v_plus) == std::vector<std::string>{"3", "4"});
    CHECK(p.v_zero.empty());
    REQUIRE(p.m_minus.has_value());
    CHECK(matched_labels(g, *p.m_minus) == std::vector<std::string>{"3-1@2", "4-2@3"});
    CHECK(matched_labels(g, *p.m_plus) == std::vector<std::string>{"1-4@6", "2-3@5"});
}

TEST_CASE("partition rejects non-cliques and respects scopes") {
    CHECK_THROWS_AS(partition(fixture("fig1_gpp")), std::invalid_argument);
    TemporalGraph g = fixture("fig2_k5");
    std::vector<NodeId> scope = {node(g, "b"), node(g, "c"), node(g, "d"), node(g, "e")};
    PartitionInfo p = partition(g, scope);
    CHECK(names(g, p.v_minus) == std::vector<std::string>{"b", "c", "e"});
    CHECK(names(g, p.v_plus) == std::vector<std::string>{"d", "e"});
}

TEST_CASE("check_non_12 verdicts") {
    CHECK(check_non_12(fixture("fig12_k8")).passes());
    CHECK(check_non_12(fixture("k4_min")).passes());

    StructureReport k2 = check_non_12(th::k2());
    CHECK_FALSE(k2.passes());
    CHECK(k2.partition_ok == false);

    StructureReport two = check_non_12(fixture("k4_2hop"));
    CHECK_FALSE(two.passes());
    CHECK(two.partition_ok == true);
    REQUIRE(two.cross_edge_order_ok == false);
    // witness names the violating cross edge and the adjacent earliest edge
    std::string w = two.witnesses.at("cross_edge_order_ok");
    CHECK(w.find("1-4@2") != std::string::npos);
    CHECK(w.find("1-3@3") != std::string::npos);
}

TEST_CASE("check_non_123 verdicts") {
    CHECK(check_non_123(fixture("fig12_k8")).passes());
    CHECK(check_non_123(fixture("k4_min")).passes());
    StructureReport k2 = check_non_123(th::k2());
    CHECK_FALSE(k2.passes());
    CHECK(k2.partition_ok == false);
    CHECK_FALSE(k2.matching_label_gap_ok.has_value());
}

TEST_CASE("check_reciprocity") {
    CHECK(check_reciprocity(fixture("fig12_k8")).reciprocity_ok == true);
    CHECK(check_reciprocity(fixture("k4_min")).reciprocity_ok == true);
    CHECK_THROWS_AS(check_reciprocity(fixture("fig2_k5")), std::invalid_argument);
}

TEST_CASE("reduce_to_biclique on fig12") {
    TemporalGraph g = fixture("fig12_k8");
    BicliqueReduction red = reduce_to_biclique(g);
    CHECK(red.cross.size() == 16);
    CHECK(red.graph.contact_count() == 16);
    CHECK(red.graph.node_count() == 8);
    CHECK(is_biclique(red.graph, red.part_plus, red.part_minus));
    CHECK(is_temporally_connected(red.graph));

    // node 0's earliest edge inside the restriction is 4-0@8 even though its
    // clique-wide earliest is 1-0@0
    ExtremalInfo whole = extremal(g, node(g, "0"));
    CHECK(g.label(whole.e_minus) == 0);
    ExtremalInfo cut = extremal(red.graph, node(g, "0"));
    CHECK(red.graph.label(cut.e_minus) == 8);
    CHECK(red.graph.node_name(cut.n_minus) == "4");

    // extremal matchings recomputed in the restriction coincide with the
    // clique-level ones
    for (const MatchEdge& m : red.m_minus) {
        ExtremalInfo e = extremal(red.graph, m.from);
        CHECK(e.n_minus == m.to);
        CHECK(red.graph.label(e.e_minus) == g.label(m.edge));
    }
    for (const MatchEdge& m : red.m_plus) {
        ExtremalInfo e = extremal(red.graph, m.from);
        CHECK(e.n_plus == m.to);
        CHECK(red.graph.label(e.e_plus) == g.label(m.edge));
    }
}

TEST_CASE("reduce_to_biclique on k4_min") {
    TemporalGraph g = fixture("k4_min");
    BicliqueReduction red = reduce_to_biclique(g);
    CHECK(red.cross.size() == 4);
    std::vector<Label> labels;
    for (EdgeId e : red.cross.ids) labels.push_back(g.label(e));
    CHECK(labels == std::vector<Label>{2, 3, 5, 6});
    CHECK(matched_labels(g, red.m_minus) == std::vector<std::string>{"3-1@2", "4-2@3"});
    CHECK(matched_labels(g, red.m_plus) == std::vector<std::string>{"1-4@6", "2-3@5"});
}

TEST_CASE("reduce_to_biclique refuses dismountable cliques") {
    CHECK_THROWS_AS(reduce_to_biclique(fixture("fig2_k5")), std::invalid_argument);
    CHECK_THROWS_AS(reduce_to_biclique(fixture("k4_2hop")), std::invalid_argument);
}

TEST_CASE("equivalence: check_non_12 iff no <=2-hop dismountable node") {
    th::for_random_cliques(4, 9, 10, [](const TemporalGraph& g, int, uint64_t) {
        bool predicate = check_non_12(g).passes();
        bool dismountable = find_k_hop(g, std::nullopt, 2).has_value();
        CHECK(predicate == !dismountable);
    });
}

TEST_CASE("equivalence: check_non_123 iff no k-hop dismountable node at all") {
    th::for_random_cliques(4, 9, 10, [](const TemporalGraph& g, int n, uint64_t) {
        bool predicate = check_non_123(g).passes();
        bool dismountable = find_k_hop(g, std::nullopt, std::max(1, n - 2)).has_value();
        CHECK(predicate == !dismountable);
    });
}

TEST_CASE("consequences on graphs passing check_non_12") {
    int seen = 0;
    auto probe = [&](const TemporalGraph& g) {
        if (!check_non_12(g).passes()) return;
        ++seen;
        PartitionInfo p = partition(g);
        CHECK(p.v_zero.empty());
        CHECK(p.v_minus.size() == p.v_plus.size());
        REQUIRE(p.m_minus.has_value());
        REQUIRE(p.m_plus.has_value());
        CHECK(p.m_minus->size() == p.v_minus.size());
        CHECK(p.m_plus->size() == p.v_minus.size());
        CHECK(check_reciprocity(g).reciprocity_ok == true);
        BicliqueReduction red = reduce_to_biclique(g);
        CHECK(is_temporally_connected(red.graph));
        // any spanner of the restriction is a spanner of the clique
        EdgeSubset inner = minimal_spanner_greedy(red.graph, 7);
        std::vector<EdgeId> ids;
        for (EdgeId e : inner.ids) ids.push_back(red.edge_of[e]);
        CHECK(verify_spanner(g, EdgeSubset::of(g, ids)));
    };
    probe(fixture("fig12_k8"));
    probe(fixture("k4_min"));
    th::for_random_cliques(4, 9, 20,
                           [&](const TemporalGraph& g, int, uint64_t) { probe(g); });
    CHECK(seen >= 2);
}
