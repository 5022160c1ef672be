#include <map>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "tspan/dismount.hpp"
#include "tspan/fixtures.hpp"
#include "tspan/generate.hpp"
#include "tspan/oracle.hpp"
#include "tspan/pivot.hpp"
#include "tspan/reach.hpp"

using namespace tspan;

namespace {

NodeId node(const TemporalGraph& g, const char* name) { return *g.find_node(name); }

EdgeId edge(const TemporalGraph& g, const char* u, const char* v) {
    return *g.edge_between(node(g, u), node(g, v));
}

std::map<std::string, int> named(const TemporalGraph& g,
                                 const std::vector<std::pair<NodeId, int>>& xs) {
    std::map<std::string, int> out;
    for (auto [v, c] : xs) out[g.node_name(v)] = c;
    return out;
}

}  // namespace

TEST_CASE("fixtures validate and match their documented shapes") {
    for (const std::string& name : fixture_names()) {
        TemporalGraph g = fixture(name);
        CHECK(g.node_count() > 0);
    }
    TemporalGraph f2 = fixture("fig2_k5");
    CHECK(f2.contact_count() == 10);
    CHECK(f2.min_label() == 0);
    CHECK(f2.max_label() == 9);

    TemporalGraph f12 = fixture("fig12_k8");
    CHECK(f12.contact_count() == 28);
    CHECK(f12.min_label() == 0);
    CHECK(f12.max_label() == 27);
    std::set<Label> labels;
    for (const Contact& c : f12.contacts()) labels.insert(c.t);
    CHECK(labels.size() == 28);

    TemporalGraph g2 = fixture("fig5_g2");
    CHECK(compress(g2).graph.edge_list_string() == g2.edge_list_string());

    CHECK_THROWS_AS(fixture("nope"), std::invalid_argument);
}

TEST_CASE("min_spanner_bruteforce on k4_min finds the four cross edges") {
    TemporalGraph g = fixture("k4_min");
    MinSpannerResult r = min_spanner_bruteforce(g);
    REQUIRE(r.edges.has_value());
    CHECK_FALSE(r.budget_exhausted);
    CHECK(r.size() == 4);
    CHECK(*r.edges == EdgeSubset::of(g, {edge(g, "1", "3"), edge(g, "2", "4"),
                                         edge(g, "2", "3"), edge(g, "1", "4")}));
    CHECK(verify_spanner(g, *r.edges));
}

TEST_CASE("min_spanner_bruteforce edge cases") {
    MinSpannerResult k2 = min_spanner_bruteforce(th::k2());
    CHECK(k2.size() == 1);

    TemporalGraph f2 = fixture("fig2_k5");
    MinSpannerResult r = min_spanner_bruteforce(f2);
    REQUIRE(r.edges.has_value());
    CHECK(r.size() >= 4);
    CHECK(r.size() <= 7);
    CHECK(verify_spanner(f2, *r.edges));

    CHECK_THROWS_AS(min_spanner_bruteforce(fixture("fig5_g3")), std::invalid_argument);

    // a one-millisecond budget on the K8 reports exhaustion, not failure
    SearchBudget tight;
    tight.time_limit_ms = 1;
    MinSpannerResult out = min_spanner_bruteforce(fixture("fig12_k8"), tight);
    CHECK(out.budget_exhausted);
    CHECK_FALSE(out.edges.has_value());

    SearchBudget capped;
    capped.max_size = 3;  // below any spanning footprint of K4
    CHECK(min_spanner_bruteforce(fixture("k4_min"), capped).budget_exhausted);
}

TEST_CASE("minimal_spanner_greedy outputs are minimal spanners") {
    TemporalGraph g = fixture("fig2_k5");
    for (uint64_t seed = 0; seed < 10; ++seed) {
        EdgeSubset s = minimal_spanner_greedy(g, seed);
        CHECK(verify_spanner(g, s));
        for (EdgeId drop : s.ids) {
            std::vector<EdgeId> rest;
            for (EdgeId e : s.ids)
                if (e != drop) rest.push_back(e);
            CHECK_FALSE(verify_spanner(g, EdgeSubset::of(g, rest)));
        }
        CHECK(minimal_spanner_greedy(g, seed) == s);  // same seed, same set
    }
    CHECK(minimal_spanner_greedy(th::k2(), 0).size() == 1);
}

TEST_CASE("greedy hits 2n-3 on fig12 within a few hundred seeds") {
    TemporalGraph g = fixture("fig12_k8");
    int best = g.contact_count();
    for (uint64_t seed = 0; seed < 200; ++seed)
        best = std::min(best, minimal_spanner_greedy(g, seed).size());
    CHECK(best <= 13);
}

TEST_CASE("oracle_dismountable_nodes on the fixtures") {
    TemporalGraph f2 = fixture("fig2_k5");
    auto one = named(f2, oracle_dismountable_nodes(f2, 1));
    CHECK(one == std::map<std::string, int>{{"a", 2}});

    CHECK(oracle_dismountable_nodes(fixture("fig12_k8"), 6).empty());

    TemporalGraph k4 = fixture("k4_2hop");
    auto two = named(k4, oracle_dismountable_nodes(k4, 2));
    // both 2 and 4 qualify at cost 3 (2 delegates emissions over 1-2@1 and
    // receives over 1-3@3, 2-3@6)
    CHECK(two == std::map<std::string, int>{{"2", 3}, {"4", 3}});

    CHECK_THROWS_AS(oracle_dismountable_nodes(fixture("fig1_gpp"), 2),
                    std::invalid_argument);
}

TEST_CASE("oracle_pivot_edges on the fixtures") {
    CHECK(oracle_pivot_edges(fixture("fig12_k8")).empty());

    TemporalGraph k4 = th::full_range_k4();
    CHECK(oracle_pivot_edges(k4) == std::vector<EdgeId>{edge(k4, "c", "d")});

    TemporalGraph k2 = th::k2();
    CHECK(oracle_pivot_edges(k2) == std::vector<EdgeId>{0});

    CHECK_THROWS_AS(oracle_pivot_edges(fixture("fig5_g3")), std::invalid_argument);
}

TEST_CASE("gen_random_clique shape and determinism") {
    TemporalGraph g = gen_random_clique(4, 11);
    CHECK(g.contact_count() == 6);
    std::set<Label> labels;
    for (const Contact& c : g.contacts()) labels.insert(c.t);
    CHECK(labels == std::set<Label>{0, 1, 2, 3, 4, 5});
    CHECK(gen_random_clique(4, 11) == g);
    CHECK_FALSE(gen_random_clique(4, 12) == g);
    CHECK(gen_random_clique(9, 0).contact_count() == 36);
    CHECK_THROWS_AS(gen_random_clique(1, 0), std::invalid_argument);
}

TEST_CASE("gen_full_range_clique output is full-range and dismountable") {
    for (int n = 3; n <= 8; ++n) {
        for (uint64_t seed = 0; seed < 4; ++seed) {
            TemporalGraph g = gen_full_range_clique(n, seed);
            CHECK(is_clique(g));
            CHECK(is_full_range(g));
            // consecutive labels sit on adjacent edges
            for (EdgeId e = 1; e < g.contact_count(); ++e) {
                const Contact& a = g.contact(e - 1);
                const Contact& b = g.contact(e);
                bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
                CHECK(share);
            }
            CHECK(find_k_hop(g, std::nullopt, 3).has_value());
        }
    }
    CHECK_THROWS_AS(gen_full_range_clique(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_full_range_clique(9, 0), std::invalid_argument);
}

TEST_CASE("footprint_2_degenerate") {
    TemporalGraph f2 = fixture("fig2_k5");
    EdgeSubset spanner = EdgeSubset::of(
        f2, {edge(f2, "a", "c"), edge(f2, "a", "e"), edge(f2, "b", "e"),
             edge(f2, "c", "e"), edge(f2, "b", "c"), edge(f2, "b", "d"),
             edge(f2, "c", "d")});
    CHECK(footprint_2_degenerate(f2, spanner));

    GraphBuilder tri;
    tri.add_contact("a", "b", 1);
    tri.add_contact("b", "c", 2);
    tri.add_contact("a", "c", 3);
    TemporalGraph t = tri.build();
    CHECK(footprint_2_degenerate(t, EdgeSubset::all(t)));

    TemporalGraph k4 = fixture("k4_min");
    CHECK_FALSE(footprint_2_degenerate(k4, EdgeSubset::all(k4)));
}

TEST_CASE("oracle agreement with the dismount search") {
    th::for_random_cliques(4, 8, 8, [](const TemporalGraph& g, int n, uint64_t) {
        for (int k : {1, 2, 3, n - 2}) {
            if (k < 1) continue;
            auto oracle = oracle_dismountable_nodes(g, k);
            auto step = find_k_hop(g, std::nullopt, k);
            CHECK(oracle.empty() == !step.has_value());
            if (step) {
                int best = g.contact_count();
                bool member = false;
                for (auto [v, cost] : oracle) {
                    best = std::min(best, cost);
                    if (v == step->removed && cost == step->cost()) member = true;
                }
                CHECK(member);
                CHECK(step->cost() == best);
            }
        }
    });
}

TEST_CASE("oracle agreement with the pivot scan") {
    th::for_random_cliques(3, 8, 8, [](const TemporalGraph& g, int, uint64_t) {
        auto oracle = oracle_pivot_edges(g);
        auto cert = find_pivot(g);
        CHECK(oracle.empty() == !cert.has_value());
        if (cert)
            CHECK(std::find(oracle.begin(), oracle.end(), cert->pivot) != oracle.end());
    });
}

TEST_CASE("greedy minimal spanners validate across the corpus") {
    th::for_random_cliques(4, 8, 5, [](const TemporalGraph& g, int, uint64_t seed) {
        EdgeSubset s = minimal_spanner_greedy(g, seed);
        CHECK(verify_spanner(g, s));
        for (EdgeId drop : s.ids) {
            std::vector<EdgeId> rest;
            for (EdgeId e : s.ids)
                if (e != drop) rest.push_back(e);
            CHECK_FALSE(verify_spanner(g, EdgeSubset::of(g, rest)));
        }
    });
}
