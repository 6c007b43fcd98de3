#pragma once

#include "sqw/operators.hpp"

namespace sqw {

// Triangle-inflated honeycomb on a torus: m x m cells of two triangles each,
// vertices labeled (x,y,i,k) with 0 <= x,y < m, i in {0,1}, k in {0,1,2} and
// linear index ((x*m + y)*2 + i)*3 + k. Blue polygons are the triangles
// {(x,y,i,.)}; red polygons the matching pairs
//   k=0: (x,y,0,0)-(x,y,1,0)
//   k=1: (x,y,0,1)-(x-1,y,1,1)
//   k=2: (x,y,0,2)-(x,y-1,1,2)
// with coordinates modulo m.
struct HoneycombModel {
    int m = 0;
    Graph graph;
    TessellationPair tessellations; // blue triangles, red matching
};

// m must be even (OddM) and at least 2 (TooSmall).
HoneycombModel honeycomb(int m);

int honeycomb_index(const HoneycombModel& model, int x, int y, int i, int k);

// Walk with uniform vectors everywhere, or with custom blue vectors (red
// stays uniform: the matching pairs must be balanced for the coined form).
EvolutionOperator honeycomb_walk(const HoneycombModel& model);
EvolutionOperator honeycomb_walk(const HoneycombModel& model,
                                 const std::vector<PolygonStateVector>& blue_vectors);

// Ring version of the three-state line walk: sites in 0..L-1 with vertices
// (site, i), i in {0,1,2}, linear index site*3 + i. Blue polygons are the
// site triangles carrying the coin eigenvector alpha_rho; red polygons are
// the pairs (n,0)-(n+1,2) plus the singletons (n,1), so the red reflection
// is exactly the flip-flop shift.
struct ThreeStateModel {
    int sites = 0;
    double rho = 0;
    Graph graph;
    TessellationPair tessellations;
    std::vector<Complex> alpha_rho; // 3 components
    ComplexMatrix coin;             // C(rho) = 2|alpha><alpha| - I
};

// L >= 3 (TooSmall), 0 < rho < 1 (BadRho).
ThreeStateModel three_state(int sites, double rho);

EvolutionOperator three_state_walk(const ThreeStateModel& model);

// C(rho) evaluated from its closed form (independent of the projector
// route; the two must agree, which the tests pin down).
ComplexMatrix three_state_coin(double rho);

} // namespace sqw
