#include <doctest.h>

#include "sqw/classify.hpp"
#include "sqw/models.hpp"
#include "sqw/named_graphs.hpp"
#include "sqw/tessellation.hpp"
#include "support.hpp"

using namespace sqw;

namespace {

// Independent re-validation of the three Krausz conditions.
void check_krausz_conditions(const Graph& g, const KrauszPartition& partition) {
    std::vector<int> membership(g.vertex_count(), 0);
    std::vector<int> edge_hits(g.edge_count(), 0);
    for (const auto& elem : partition.elements) {
        for (size_t a = 0; a < elem.size(); ++a) {
            ++membership[elem[a]];
            for (size_t b = a + 1; b < elem.size(); ++b) {
                CHECK(g.adjacent(elem[a], elem[b]));
                ++edge_hits[g.edge_index(elem[a], elem[b])];
            }
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(membership[v] == 2);
    for (int e = 0; e < g.edge_count(); ++e) CHECK(edge_hits[e] == 1);
}

void check_two_b_prime_evidence(const Graph& g, const TwoBPrimeEvidence& ev) {
    // M is a perfect matching of maximal 2-cliques.
    std::vector<int> mate(g.vertex_count(), -1);
    for (auto [u, v] : ev.matching) {
        CHECK(g.adjacent(u, v));
        CHECK(mate[u] == -1);
        CHECK(mate[v] == -1);
        mate[u] = v;
        mate[v] = u;
        for (int w : g.neighbors(u)) CHECK((w == v || !g.adjacent(w, v)));
    }
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(mate[v] != -1);
    // Complement components are cliques and pairwise disconnected.
    std::vector<int> comp(g.vertex_count(), -1);
    for (size_t i = 0; i < ev.components.size(); ++i)
        for (int v : ev.components[i]) {
            CHECK(comp[v] == -1);
            comp[v] = static_cast<int>(i);
        }
    for (const auto& c : ev.components)
        for (size_t a = 0; a < c.size(); ++a)
            for (size_t b = a + 1; b < c.size(); ++b) {
                CHECK(g.adjacent(c[a], c[b]));
                CHECK(mate[c[a]] != c[b]);
            }
    for (auto [u, v] : g.edges())
        if (mate[u] != v) CHECK(comp[u] == comp[v]); // non-matching edges stay inside components
}

} // namespace

TEST_SUITE("classify") {

TEST_CASE("krausz partition search") {
    Graph fig1 = named_graph("fig1");
    auto partition = find_krausz_partition(fig1);
    REQUIRE(partition.has_value());
    check_krausz_conditions(fig1, *partition);

    CHECK_FALSE(find_krausz_partition(named_graph("claw")).has_value());

    auto k3 = find_krausz_partition(complete_graph(3));
    REQUIRE(k3.has_value());
    check_krausz_conditions(complete_graph(3), *k3);
    // Deterministic search order gives the triangle plus three singletons.
    CHECK(k3->elements ==
          std::vector<VertexSubset>{{0}, {0, 1, 2}, {1}, {2}});

    CHECK_THROWS_WITH_AS(find_krausz_partition(Graph(41)), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("line graph recognition") {
    CHECK(is_line_graph(named_graph("fig1")));
    for (int i = 1; i <= 9; ++i) CHECK_FALSE(is_line_graph(beineke_graph(i)));
    CHECK(is_line_graph(cycle_graph(4)));
    CHECK(is_line_graph_certified(named_graph("fig1")));
}

TEST_CASE("recognizers agree on random graphs") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = test::random_graph(rng, 4 + trial % 4, 0.45);
        CHECK(is_line_graph(g) == find_krausz_partition(g).has_value());
    }
}

TEST_CASE("line graphs of random roots are always accepted") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        Graph root = test::random_graph(rng, 4 + trial % 3, 0.5);
        if (root.edge_count() == 0) continue;
        Graph lg = line_graph(root).graph;
        CHECK(is_line_graph(lg));
        CHECK(find_krausz_partition(lg).has_value());
    }
}

TEST_CASE("root graph recovery") {
    Graph fig1 = named_graph("fig1");
    auto root = root_graph(fig1);
    REQUIRE(root.has_value());
    CHECK_FALSE(two_coloring(root->root).has_value()); // non-bipartite root
    CHECK(are_isomorphic(line_graph(root->root).graph, fig1));

    auto c5 = root_graph(cycle_graph(5));
    REQUIRE(c5.has_value());
    CHECK(are_isomorphic(c5->root, cycle_graph(5)));

    auto k3 = root_graph(complete_graph(3));
    REQUIRE(k3.has_value());
    CHECK(are_isomorphic(line_graph(k3->root).graph, complete_graph(3)));

    CHECK_FALSE(root_graph(named_graph("claw")).has_value());
}

TEST_CASE("root round trip across the accepted catalog") {
    for (const auto& name : named_graph_catalog()) {
        Graph g = named_graph(name);
        if (g.vertex_count() > 12 || !is_line_graph(g)) continue;
        auto root = root_graph(g);
        REQUIRE_MESSAGE(root.has_value(), name);
        if (g.edge_count() == 0) continue; // line_graph needs an edge
        CHECK_MESSAGE(are_isomorphic(line_graph(root->root).graph, g), name);
    }
}

TEST_CASE("two-b-prime witness search") {
    auto c4 = check_two_b_prime(cycle_graph(4));
    REQUIRE(c4.has_value());
    check_two_b_prime_evidence(cycle_graph(4), *c4);

    auto three = three_state(6, 0.5);
    CHECK_FALSE(check_two_b_prime(three.graph).has_value());

    CHECK_FALSE(check_two_b_prime(complete_graph(3)).has_value()); // odd order
    CHECK_FALSE(check_two_b_prime(named_graph("barbell")).has_value());
}

TEST_CASE("classification of fixed graphs") {
    CHECK(classify_graph(named_graph("fig1")).label == GraphClass::Class2a);
    CHECK(classify_graph(named_graph("beineke(6)")).label == GraphClass::Class1);
    CHECK(classify_graph(named_graph("barbell")).label == GraphClass::Class2b);
    CHECK(classify_graph(cycle_graph(4)).label == GraphClass::Class2bPrime);
    CHECK(classify_graph(complete_graph(3)).label == GraphClass::Class2b);

    Graph disconnected(4);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK_THROWS_WITH_AS(classify_graph(disconnected), doctest::Contains("Disconnected"), Error);
}

TEST_CASE("classification evidence is re-checkable") {
    auto fig1 = classify_graph(named_graph("fig1"));
    REQUIRE(fig1.krausz.has_value());
    check_krausz_conditions(named_graph("fig1"), *fig1.krausz);
    REQUIRE(fig1.root.has_value());
    CHECK(are_isomorphic(line_graph(fig1.root->root).graph, named_graph("fig1")));

    auto class1 = classify_graph(named_graph("beineke(6)"));
    REQUIRE(class1.forbidden.has_value());
    Graph host = named_graph("beineke(6)");
    Graph pattern = beineke_graph(class1.forbidden->forbidden_index);
    const auto& map = class1.forbidden->mapping;
    for (int a = 0; a < pattern.vertex_count(); ++a)
        for (int b = a + 1; b < pattern.vertex_count(); ++b)
            CHECK(pattern.adjacent(a, b) == host.adjacent(map[a], map[b]));

    auto prime = classify_graph(cycle_graph(4));
    REQUIRE(prime.two_b_prime.has_value());
    check_two_b_prime_evidence(cycle_graph(4), *prime.two_b_prime);
}

TEST_CASE("class-2b verdicts match the diamond-free bipartite-clique-graph theorem") {
    std::mt19937 rng(32);
    int seen = 0;
    for (int trial = 0; trial < 300 && seen < 40; ++trial) {
        Graph g = test::random_connected_graph(rng, 4 + trial % 4, 0.4);
        auto evidence = classify_graph(g);
        bool theorem = is_diamond_free(g) && two_coloring(clique_graph(g).graph).has_value();
        bool is_2b = evidence.label == GraphClass::Class2b ||
                     evidence.label == GraphClass::Class2bPrime;
        CHECK(is_2b == (theorem && is_line_graph(g)));
        if (is_2b) ++seen;
    }
    CHECK(seen > 0);
}

TEST_CASE("line graph of own clique graph refinement") {
    CHECK(is_line_graph_of_clique_graph(cycle_graph(5)));
    CHECK_FALSE(is_line_graph_of_clique_graph(path_graph(3)));
}

} // TEST_SUITE
