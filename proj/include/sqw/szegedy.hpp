#pragma once

#include <utility>
#include <vector>

#include "sqw/operators.hpp"

namespace sqw {

struct RealMatrix {
    int rows = 0, cols = 0;
    std::vector<double> data;

    RealMatrix() = default;
    RealMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

    double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const double& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

// Double-reflection walk on a bipartite root with parts of sizes m and n,
// acting on the mn-dimensional product space. P maps part A to part B row
// stochastically, Q maps back; theta/theta_prime carry per-edge phases
// (both indexed (a,b)). The embedding T lists, per original walk vertex,
// the (a,b) pair it occupies; its image is exactly the root edge set.
struct SzegedyInstance {
    int m = 0, n = 0;
    RealMatrix p, q;                          // m x n and n x m
    RealMatrix theta, theta_prime;            // m x n each
    std::vector<std::pair<int, int>> t_map;   // vertex k -> (a, b)
    Graph root;                               // m + n vertices; part B offset by m
    ReflectionOperator r0, r1;                // over dimension m * n

    EvolutionOperator walk() const { return EvolutionOperator{r0, r1}; }
    int idle_dimension() const { return m * n - static_cast<int>(t_map.size()); }
};

// Builds the instance from stochastic matrices. Requires right-stochastic
// rows (NotStochastic) and matching supports P' = Q'^T (SupportMismatch).
// Phases default to zero, which is the phase-free construction.
SzegedyInstance szegedy_from_matrices(const RealMatrix& p, const RealMatrix& q,
                                      const RealMatrix& theta, const RealMatrix& theta_prime);
SzegedyInstance szegedy_from_matrices(const RealMatrix& p, const RealMatrix& q);

// Casts a 2-tessellable walk with no edge in the tessellation intersection
// into the extended Szegedy form: parts are the blue/red polygons, root
// edges the nonempty polygon intersections, p_{ab} = |a_{a;k}|^2 with the
// amplitude phases carried verbatim so that |phi_a> = T|alpha_a> exactly.
// Throws EdgeInIntersection when the walk lies outside Szegedy's model.
SzegedyInstance szegedy_convert(const Graph& g, const TessellationPair& pair,
                                const std::vector<PolygonStateVector>& blue_vectors,
                                const std::vector<PolygonStateVector>& red_vectors);

struct BlockCheck {
    bool ok = false;
    double max_deviation = 0.0;
    int idle_dimension = 0;
};

// Orders the product basis with the T-image vectors first (by original
// vertex index, idle vectors after in flat order) and checks the block
// forms: W restricted to the image equals the walk operator U, the idle
// diagonal of W is +1, the idle diagonal of R0 is -1, and all off-blocks
// vanish. `ok` means every deviation is below kOperatorTol.
BlockCheck verify_block_structure(const SzegedyInstance& inst, const EvolutionOperator& ev);

} // namespace sqw
