#include "sqw/named_graphs.hpp"

#include <charconv>

namespace sqw {

Graph complete_graph(int n) {
    if (n < 1) fail("BadParams", "complete(n) needs n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) fail("BadParams", "cycle(n) needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) fail("BadParams", "path(n) needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph claw() { return from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

// K4 minus an edge; 0-1 is the central edge, 2 and 3 the tips.
Graph diamond() { return from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

} // namespace

Graph beineke_graph(int index) {
    switch (index) {
        case 1:
            return claw();
        case 2:
            // K(2,3) with parts {0,1} / {2,3,4} plus the edge 2-3.
            return from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}});
        case 3:
            // K5 minus the edge 3-4: two 4-cliques sharing a triangle.
            return from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                                  {2, 3}, {2, 4}});
        case 4:
            // Diamond (central edge 0-1, tips 2 and 3) with a pendant edge
            // on each tip.
            return from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}, {3, 5}});
        case 5:
            // K4 on 0..3 sharing the edge 2-3 with the triangle 2-3-4, plus
            // a pendant vertex on 4.
            return from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4},
                                  {3, 4}, {4, 5}});
        case 6:
            // Two 4-cliques sharing the edge 0-1.
            return from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4},
                                  {0, 5}, {1, 4}, {1, 5}, {4, 5}});
        case 7:
            // Diamond with tips 2,3 joined by the path 2-4-5-3; the clique
            // graph is a pentagon.
            return from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}, {4, 5},
                                  {3, 5}});
        case 8:
            // Diamond (central edge 0-2, tips 1 and 3) with triangles
            // erected on the edges 0-1 (vertex 5) and 2-3 (vertex 4).
            return from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 5}, {2, 3},
                                  {2, 4}, {3, 4}});
        case 9:
            // 5-wheel: hub 0, rim 1-2-3-4-5.
            return from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3},
                                  {3, 4}, {4, 5}, {1, 5}});
        default:
            fail("BadParams", "beineke index must be 1..9");
    }
}

namespace {

// Triangle 0-1-2 with outer triangles on each central edge: 3 on 0-1, 4 on
// 1-2, 5 on 0-2.
Graph hajos() {
    return from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5},
                          {2, 5}});
}

// Triangles 0-1-2 and 3-4-5 joined by the bridge 2-3.
Graph barbell() {
    return from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

// K4 on 0..3 plus vertex 4 adjacent to 2 and 3.
Graph fig1() {
    return from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
}

bool parse_param(const std::string& name, const std::string& prefix, int& value) {
    if (name.size() < prefix.size() + 3) return false;
    if (name.compare(0, prefix.size(), prefix) != 0 || name[prefix.size()] != '(' ||
        name.back() != ')')
        return false;
    const char* first = name.data() + prefix.size() + 1;
    const char* last = name.data() + name.size() - 1;
    auto res = std::from_chars(first, last, value);
    return res.ec == std::errc() && res.ptr == last;
}

} // namespace

Graph named_graph(const std::string& name) {
    int k = 0;
    if (parse_param(name, "complete", k)) return complete_graph(k);
    if (parse_param(name, "cycle", k)) return cycle_graph(k);
    if (parse_param(name, "path", k)) return path_graph(k);
    if (parse_param(name, "beineke", k)) return beineke_graph(k);
    if (name == "claw") return claw();
    if (name == "diamond") return diamond();
    if (name == "hajos") return hajos();
    if (name == "barbell") return barbell();
    if (name == "fig1") return fig1();
    fail("UnknownName", name);
}

std::vector<std::string> named_graph_catalog() {
    std::vector<std::string> names = {"claw", "diamond", "hajos", "barbell", "fig1"};
    for (int i = 1; i <= 9; ++i) names.push_back("beineke(" + std::to_string(i) + ")");
    for (int n : {1, 2, 3, 4, 5, 6}) names.push_back("complete(" + std::to_string(n) + ")");
    for (int n : {3, 4, 5, 6, 7}) names.push_back("cycle(" + std::to_string(n) + ")");
    for (int n : {2, 3, 4, 5, 6}) names.push_back("path(" + std::to_string(n) + ")");
    return names;
}

} // namespace sqw
