#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sqw/graph.hpp"

namespace sqw {

// A polygon is a clique of the host graph, stored sorted. A tessellation is
// a list of pairwise-disjoint polygons covering every vertex; polygon order
// is significant (file formats and duplicate-stripping depend on it).
struct Tessellation {
    std::vector<VertexSubset> polygons;
};

struct TessellationPair {
    Tessellation blue;
    Tessellation red;
};

struct TessellationViolation {
    enum Kind { NotAClique, Overlap, UncoveredVertex } kind;
    int polygon; // first offending polygon (-1 for UncoveredVertex)
    int vertex;  // offending vertex, when meaningful
};

// nullopt means the tessellation is valid: polygons are cliques, pairwise
// disjoint, and cover every vertex. Polygon entries outside 0..N-1 throw
// OutOfRange.
std::optional<TessellationViolation> validate_tessellation(const Graph& g,
                                                           const Tessellation& t);

// Throws the violation as an Error (NotAClique / Overlap / UncoveredVertex)
// instead of returning it.
void require_valid_tessellation(const Graph& g, const Tessellation& t);

// Partial tessellations (tessellations of an induced subgraph) drop the
// coverage requirement but keep disjointness and cliqueness.
std::optional<TessellationViolation> validate_partial_tessellation(const Graph& g,
                                                                   const Tessellation& t);

// Edges not inside any polygon of either color. Empty result means the pair
// covers E(g).
std::vector<std::pair<int, int>> uncovered_edges(const Graph& g, const TessellationPair& pair);

inline bool union_covers_edges(const Graph& g, const TessellationPair& pair) {
    return uncovered_edges(g, pair).empty();
}

// A connected graph is 2-tessellable iff its clique graph is 2-colorable.
// Throws Disconnected.
bool is_two_tessellable(const Graph& g);

// Constructs a covering pair: 2-color the clique graph, lift maximal
// cliques to polygons of their color, strip duplicate memberships (keep the
// first polygon in order), then pad singletons of the opposite color for
// vertices covered only once. Throws NotTwoTessellable / Disconnected.
TessellationPair build_two_tessellation(const Graph& g);

// Independent oracle: exhaustive search over all clique partitions for a
// covering pair. Capped at kBruteTessCap vertices (throws TooLarge).
bool brute_force_two_tessellable(const Graph& g);

// Enumerates every partition of V(g) into cliques, in a deterministic
// order. Exposed for the exhaustive tessellation-pair tests.
std::vector<std::vector<VertexSubset>> enumerate_clique_partitions(const Graph& g);

// Edges whose endpoints share a blue polygon and also share a red polygon.
std::vector<std::pair<int, int>> intersection_edges(const Graph& g,
                                                    const TessellationPair& pair);

} // namespace sqw
