#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqw/constants.hpp"
#include "sqw/error.hpp"

namespace sqw {

using VertexSubset = std::vector<int>; // sorted ascending, distinct

// Simple undirected graph on vertices 0..N-1. No self-loops, no duplicate
// edges. Edges are stored sorted as (u,v) with u < v; adjacency lists are
// sorted for binary-search lookups. Vertices may carry optional labels
// (lattice coordinates and the like).
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;

    // Index of edge {u,v} in edges(), or -1. Order of u,v irrelevant.
    int edge_index(int u, int v) const;

    void add_edge(int u, int v); // throws SelfLoop/DuplicateEdge/OutOfRange

    void set_label(int v, std::string label);
    const std::string& label(int v) const;
    bool has_labels() const { return !labels_.empty(); }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

Graph graph_from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

bool is_connected(const Graph& g);

// All maximal cliques, each sorted, the list sorted lexicographically.
// Isolated vertices appear as singletons. Guarded by kCliqueGuard.
std::vector<VertexSubset> maximal_cliques(const Graph& g, int guard = kCliqueGuard);

// Clique graph K(g): vertex i represents cliques[i]; adjacency iff the
// cliques share a vertex.
struct CliqueGraph {
    Graph graph;
    std::vector<VertexSubset> cliques;
};
CliqueGraph clique_graph(const Graph& g, int guard = kCliqueGuard);

// Proper 2-coloring (0/1 per vertex) via breadth-first layering, or nullopt
// when some component has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);

// Bijection between root-graph edges and line-graph vertices: line vertex i
// represents root edge root_edge[i].
struct EdgeVertexMap {
    std::vector<std::pair<int, int>> root_edge;
};

struct LineGraphResult {
    Graph graph;
    EdgeVertexMap map;
};

// L(g): one vertex per edge of g, adjacent iff the edges share an endpoint.
// Throws NoEdges when g has none.
LineGraphResult line_graph(const Graph& g);

// First induced embedding of pattern into host (injective, preserving
// adjacency and non-adjacency), as a map pattern-vertex -> host-vertex.
std::optional<std::vector<int>> find_induced_subgraph(const Graph& host, const Graph& pattern);

// No induced diamond (K4 minus an edge). Checked two ways that must agree:
// the induced-subgraph scan and the "every edge lies in exactly one maximal
// clique" count.
bool is_diamond_free(const Graph& g, int guard = kCliqueGuard);

// Exact isomorphism for small graphs (cap kIsoCap, throws TooLarge beyond).
bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace sqw
