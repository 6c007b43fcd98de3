#include <doctest.h>

#include <sstream>

#include "sqw/io.hpp"
#include "sqw/named_graphs.hpp"
#include "support.hpp"

using namespace sqw;

TEST_SUITE("io") {

TEST_CASE("edge list round trip") {
    Graph g = named_graph("fig1");
    std::string text = format_edge_list(g);
    std::istringstream in(text);
    Graph back = read_edge_list(in);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());

    std::istringstream commented("# a comment\n3\n0 1 # trailing\n1 2\n");
    Graph small = read_edge_list(commented);
    CHECK(small.vertex_count() == 3);
    CHECK(small.edge_count() == 2);

    std::istringstream empty("# nothing\n");
    CHECK_THROWS_WITH_AS(read_edge_list(empty), doctest::Contains("BadParams"), Error);
}

TEST_CASE("edge list output is sorted and labeled") {
    Graph g(3);
    g.add_edge(2, 1);
    g.add_edge(1, 0);
    g.set_label(0, "(0,0)");
    std::string text = format_edge_list(g);
    CHECK(text == "# vertex 0 (0,0)\n3\n0 1\n1 2\n");
}

TEST_CASE("tessellation round trip preserves polygon order") {
    TessellationPair pair = test::fig1_pair();
    std::string text = format_tessellation(pair);
    std::istringstream in(text);
    TessellationPair back = read_tessellation(in);
    CHECK(back.blue.polygons == pair.blue.polygons);
    CHECK(back.red.polygons == pair.red.polygons);

    std::istringstream bad("{\"blue\": []}");
    CHECK_THROWS_WITH_AS(read_tessellation(bad), doctest::Contains("BadParams"), Error);
}

TEST_CASE("amplitude csv round trip") {
    Tessellation t{{{0, 1}, {2, 3, 4}}};
    std::mt19937 rng(81);
    std::vector<PolygonStateVector> vectors;
    for (const auto& poly : t.polygons) vectors.push_back(test::random_polygon_vector(rng, poly));
    std::string csv = format_amplitudes(t, vectors);
    std::istringstream in(csv);
    auto back = read_amplitudes(in, t);
    for (size_t p = 0; p < vectors.size(); ++p)
        for (size_t i = 0; i < vectors[p].amplitudes().size(); ++i)
            CHECK(std::abs(back[p].amplitudes()[i] - vectors[p].amplitudes()[i]) < 1e-15);

    std::istringstream bad("polygon_index,vertex,re,im\n0,7,1,0\n");
    CHECK_THROWS_AS(read_amplitudes(bad, t), Error);
}

TEST_CASE("complex entries") {
    CHECK(format_complex_entry(Complex{0.5, 0}) == "0.5+0j");
    CHECK(format_complex_entry(Complex{-0.25, -1}) == "-0.25-1j");
    CHECK(parse_complex_entry("0.5+0j") == Complex{0.5, 0});
    CHECK(parse_complex_entry("-0.25-1j") == Complex{-0.25, -1});
    Complex tricky{1.5e-5, -2.25e-7};
    CHECK(parse_complex_entry(format_complex_entry(tricky)) == tricky);
    CHECK_THROWS_WITH_AS(parse_complex_entry("nonsense"), doctest::Contains("BadParams"), Error);
}

TEST_CASE("dense csv round trip") {
    std::mt19937 rng(82);
    ComplexMatrix m(3, 3);
    for (auto& z : m.data) z = Complex{std::uniform_real_distribution<double>(-1, 1)(rng),
                                       std::uniform_real_distribution<double>(-1, 1)(rng)};
    std::string csv = format_dense_csv(m);
    std::istringstream in(csv);
    ComplexMatrix back = read_dense_csv(in);
    CHECK(back.max_abs_diff(m) == 0);
}

TEST_CASE("series csv") {
    std::string csv = format_series_csv({0.25, 0.5});
    CHECK(csv == "t,p\n0,0.25\n1,0.5\n");
}

TEST_CASE("reports carry the structured block") {
    Graph fig1 = named_graph("fig1");
    auto report = classify_report(fig1, classify_graph(fig1));
    // The [evidence] block is the machine surface; frozen byte for byte.
    const std::string golden =
        "[evidence]\n"
        "class = Class2a\n"
        "krausz_elements = {0} {0 1 2 3} {1} {2 4} {3 4}\n"
        "root_vertices = 5\n"
        "root_edges = 0-1 1-2 1-3 1-4 3-4\n"
        "root_bipartite = false\n";
    auto at = report.find("[evidence]");
    REQUIRE(at != std::string::npos);
    CHECK(report.substr(at) == golden);
}

} // TEST_SUITE
