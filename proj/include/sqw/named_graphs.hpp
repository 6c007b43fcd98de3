#pragma once

#include <string>
#include <vector>

#include "sqw/graph.hpp"

namespace sqw {

// Catalog of fixed graphs with frozen vertex numbering. Accepted names:
//   complete(n), cycle(n), path(n), claw, diamond, beineke(1..9),
//   hajos, barbell, fig1
// Throws UnknownName / BadParams.
Graph named_graph(const std::string& name);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

// The nine minimal non-line graphs, indexed 1..9. Numbering: 1 is the claw;
// 3 is K5 minus an edge (two 4-cliques sharing a triangle); 6 is two
// 4-cliques sharing an edge; 7 is the diamond whose tips are joined by a
// 3-edge path (its clique graph is a pentagon); 8 is the 4-wheel; 9 is the
// 5-wheel. 2, 4 and 5 are the remaining six-vertex graphs, with 4 chosen as
// one that embeds in the clique-linked torus search graph.
Graph beineke_graph(int index);

// Names accepted by named_graph, with parameterized entries instantiated at
// small sizes. Used by catalog-wide tests.
std::vector<std::string> named_graph_catalog();

} // namespace sqw
