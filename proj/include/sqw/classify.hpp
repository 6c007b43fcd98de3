#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sqw/constants.hpp"
#include "sqw/graph.hpp"

namespace sqw {

// Clique cover where each edge lies in exactly one element and each vertex
// in exactly two (singleton elements pad vertices that would otherwise sit
// in only one). `coloring` is a proper 2-coloring of the element
// intersection graph when one exists.
struct KrauszPartition {
    std::vector<VertexSubset> elements;
    std::optional<std::vector<int>> coloring;
};

// Complete backtracking search over per-edge clique assignments with the
// two-memberships-per-vertex constraint. With require_two_colorable set,
// only partitions whose elements admit a proper 2-coloring are accepted.
// Throws TooLarge above kKrauszCap vertices.
std::optional<KrauszPartition> find_krausz_partition(const Graph& g,
                                                     bool require_two_colorable = false,
                                                     int vertex_cap = kKrauszCap);

// Beineke forbidden-subgraph scan; polynomial and uncapped. The embedded
// forbidden graph (index 1..9 plus vertex map) is reported when present.
struct BeinekeEmbedding {
    int forbidden_index; // 1..9
    std::vector<int> mapping;
};
std::optional<BeinekeEmbedding> find_forbidden_beineke(const Graph& g);

bool is_line_graph(const Graph& g);

// Runs both recognizers and insists they agree (TooLarge above the Krausz
// cap).
bool is_line_graph_certified(const Graph& g, int vertex_cap = kKrauszCap);

struct RootGraphResult {
    Graph root;
    EdgeVertexMap map; // vertex k of the line graph -> edge of root
};

// Root-graph recovery from a Krausz partition: one root vertex per element,
// adjacent iff the elements intersect. Returns nullopt for non-line graphs.
std::optional<RootGraphResult> root_graph(const Graph& g, int vertex_cap = kKrauszCap);

enum class GraphClass { Class1, Class2a, Class2b, Class2bPrime };

const char* to_string(GraphClass c);

struct TwoBPrimeEvidence {
    std::vector<std::pair<int, int>> matching;  // perfect matching M
    std::vector<VertexSubset> components;       // clique components of G - M
};

struct ClassEvidence {
    GraphClass label;
    std::optional<BeinekeEmbedding> forbidden;   // Class1
    std::optional<KrauszPartition> krausz;       // Class2a/2b/2b'
    std::optional<RootGraphResult> root;         // Class2a/2b/2b'
    std::optional<TwoBPrimeEvidence> two_b_prime; // Class2b'
};

// Searches perfect matchings (edges that are maximal 2-cliques only) whose
// removal leaves a union of disconnected cliques. Caps: kMatchingCap
// candidate matchings, kKrauszCap vertices.
std::optional<TwoBPrimeEvidence> check_two_b_prime(const Graph& g, int vertex_cap = kKrauszCap);

// Class 1: not a line graph. Class 2a: line graph of a non-bipartite root.
// Class 2b: line graph of a bipartite root (equivalently diamond-free with
// bipartite clique graph; both routes are evaluated and must agree).
// Upgraded to 2b' when check_two_b_prime finds a witness.
ClassEvidence classify_graph(const Graph& g, int vertex_cap = kKrauszCap);

// Degree-1-free refinement: the graph equals the line graph of its own
// clique graph. Exposed as a standalone check.
bool is_line_graph_of_clique_graph(const Graph& g);

} // namespace sqw
