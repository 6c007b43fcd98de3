#pragma once

#include <utility>
#include <vector>

#include "sqw/constants.hpp"
#include "sqw/operators.hpp"

namespace sqw {

// Coined form of a walk whose red tessellation is a perfect matching with
// uniform pair vectors: the matching reflection collapses to a flip-flop
// shift, the blue reflection to one coin block per blue polygon, and the
// graph shrinks to a multigraph with one vertex per blue polygon (a d-clique
// becomes a degree-d vertex). `relabel` renumbers vertices so each blue
// polygon is consecutive; coin blocks and shift live in that ordering.
struct CoinedReduction {
    std::vector<int> relabel;                        // old vertex -> new index
    std::vector<ComplexMatrix> coin_blocks;          // per blue polygon
    std::vector<int> shift;                          // permutation on new indices
    int multigraph_vertices = 0;                     // number of blue polygons
    std::vector<std::pair<int, int>> multigraph_edges; // one per matching pair
    std::vector<int> degrees;                        // per blue polygon

    ComplexMatrix coin_dense() const;  // block diagonal of coin_blocks
    ComplexMatrix shift_dense() const; // permutation matrix
};

// Requires classify_graph(g) == Class2bPrime, red polygons of size at most
// two with the pairs uniform (NonUniformMatchingVector otherwise).
CoinedReduction coined_reduce(const Graph& g, const TessellationPair& pair,
                              const std::vector<PolygonStateVector>& blue_vectors,
                              const std::vector<PolygonStateVector>& red_vectors,
                              int vertex_cap = kKrauszCap);

// Grover diffusion coin: entries 2/d - delta_ij.
ComplexMatrix grover_coin(int d);

} // namespace sqw
