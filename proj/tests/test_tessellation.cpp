#include <doctest.h>

#include "sqw/named_graphs.hpp"
#include "sqw/tessellation.hpp"
#include "support.hpp"

using namespace sqw;

TEST_SUITE("tessellation") {

TEST_CASE("validate_tessellation") {
    Graph fig1 = named_graph("fig1");
    CHECK_FALSE(validate_tessellation(fig1, Tessellation{{{0, 1, 2, 3}, {4}}}).has_value());

    auto overlap = validate_tessellation(fig1, Tessellation{{{0, 1, 2, 3}, {3, 4}}});
    REQUIRE(overlap.has_value());
    CHECK(overlap->kind == TessellationViolation::Overlap);
    CHECK(overlap->vertex == 3);

    auto notclique = validate_tessellation(fig1, Tessellation{{{0, 4}, {1, 2, 3}}});
    REQUIRE(notclique.has_value());
    CHECK(notclique->kind == TessellationViolation::NotAClique);
    CHECK(notclique->polygon == 0);

    auto uncovered = validate_tessellation(fig1, Tessellation{{{0, 1, 2, 3}}});
    REQUIRE(uncovered.has_value());
    CHECK(uncovered->kind == TessellationViolation::UncoveredVertex);
    CHECK(uncovered->vertex == 4);

    CHECK_THROWS_WITH_AS(validate_tessellation(fig1, Tessellation{{{0, 9}}}),
                         doctest::Contains("OutOfRange"), Error);
}

TEST_CASE("union_covers_edges") {
    Graph fig1 = named_graph("fig1");
    CHECK(union_covers_edges(fig1, test::fig1_pair()));

    TessellationPair weak{Tessellation{{{0, 1, 2, 3}, {4}}},
                          Tessellation{{{0}, {1}, {2}, {3}, {4}}}};
    auto missing = uncovered_edges(fig1, weak);
    CHECK_FALSE(missing.empty());
    CHECK(std::find(missing.begin(), missing.end(), std::make_pair(2, 4)) != missing.end());

    Graph edgeless(3);
    TessellationPair singletons{Tessellation{{{0}, {1}, {2}}}, Tessellation{{{0}, {1}, {2}}}};
    CHECK(union_covers_edges(edgeless, singletons));
}

TEST_CASE("is_two_tessellable") {
    for (int n = 2; n <= 6; ++n) CHECK(is_two_tessellable(complete_graph(n)));
    CHECK_FALSE(is_two_tessellable(named_graph("beineke(7)")));
    CHECK_FALSE(is_two_tessellable(named_graph("hajos")));
    CHECK_FALSE(is_two_tessellable(cycle_graph(5)));
    CHECK(is_two_tessellable(named_graph("fig1")));

    Graph disconnected(4);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK_THROWS_WITH_AS(is_two_tessellable(disconnected), doctest::Contains("Disconnected"),
                         Error);
}

TEST_CASE("build_two_tessellation") {
    auto k4 = build_two_tessellation(complete_graph(4));
    CHECK(k4.blue.polygons == std::vector<VertexSubset>{{0, 1, 2, 3}});
    CHECK(k4.red.polygons == std::vector<VertexSubset>{{0}, {1}, {2}, {3}});

    Graph fig1 = named_graph("fig1");
    auto pair = build_two_tessellation(fig1);
    CHECK_FALSE(validate_tessellation(fig1, pair.blue).has_value());
    CHECK_FALSE(validate_tessellation(fig1, pair.red).has_value());
    CHECK(union_covers_edges(fig1, pair));

    CHECK_THROWS_WITH_AS(build_two_tessellation(cycle_graph(5)),
                         doctest::Contains("NotTwoTessellable"), Error);
}

TEST_CASE("construction satisfies the maximal-clique containment lemma") {
    std::mt19937 rng(21);
    int built = 0;
    while (built < 40) {
        Graph g = test::random_connected_graph(rng, 4 + built % 5, 0.45);
        if (!is_two_tessellable(g)) continue;
        ++built;
        auto pair = build_two_tessellation(g);
        CHECK_FALSE(validate_tessellation(g, pair.blue).has_value());
        CHECK_FALSE(validate_tessellation(g, pair.red).has_value());
        CHECK(union_covers_edges(g, pair));
        // Every maximal clique sits inside one polygon of the pair.
        for (const auto& clique : maximal_cliques(g)) {
            bool inside = false;
            for (const auto* tess : {&pair.blue, &pair.red})
                for (const auto& poly : tess->polygons)
                    if (std::includes(poly.begin(), poly.end(), clique.begin(), clique.end()))
                        inside = true;
            CHECK(inside);
        }
    }
}

TEST_CASE("brute force oracle on fixed graphs") {
    CHECK(brute_force_two_tessellable(complete_graph(3)));
    CHECK_FALSE(brute_force_two_tessellable(cycle_graph(5)));
    CHECK_THROWS_WITH_AS(brute_force_two_tessellable(complete_graph(9)),
                         doctest::Contains("TooLarge"), Error);
}

TEST_CASE("proposition equivalence on a random sweep") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = test::random_connected_graph(rng, 4 + trial % 4, 0.5);
        CHECK(is_two_tessellable(g) == brute_force_two_tessellable(g));
    }
}

TEST_CASE("intersection_edges") {
    Graph fig1 = named_graph("fig1");
    auto edges = intersection_edges(fig1, test::fig1_pair());
    CHECK(std::find(edges.begin(), edges.end(), std::make_pair(0, 1)) != edges.end());

    Graph barbell = named_graph("barbell");
    CHECK(intersection_edges(barbell, test::barbell_pair_a()).size() == 2);
    CHECK(intersection_edges(barbell, test::barbell_pair_b()).empty());

    // Returned edges really are edges lying in one blue and one red polygon.
    for (auto [u, v] : edges) CHECK(fig1.adjacent(u, v));
}

// Class-1 graphs that are 2-tessellable always keep at least one edge in
// the tessellation intersection, over every covering pair.
TEST_CASE("class-1 pairs always intersect") {
    for (const char* name : {"beineke(3)", "beineke(6)"}) {
        Graph g = named_graph(name);
        auto partitions = enumerate_clique_partitions(g);
        int covering_pairs = 0;
        for (const auto& blue : partitions) {
            for (const auto& red : partitions) {
                TessellationPair pair{Tessellation{blue}, Tessellation{red}};
                if (!union_covers_edges(g, pair)) continue;
                ++covering_pairs;
                CHECK_FALSE(intersection_edges(g, pair).empty());
            }
        }
        CHECK(covering_pairs > 0);
    }
}

} // TEST_SUITE
