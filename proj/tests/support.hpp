#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "sqw/operators.hpp"

namespace sqw::test {

// Brute-force oracles, kept independent of the library implementations they
// check.

inline std::vector<VertexSubset> brute_maximal_cliques(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSubset> cliques;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        VertexSubset vs;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) vs.push_back(v);
        bool clique = true;
        for (size_t a = 0; a < vs.size() && clique; ++a)
            for (size_t b = a + 1; b < vs.size(); ++b)
                if (!g.adjacent(vs[a], vs[b])) {
                    clique = false;
                    break;
                }
        if (!clique) continue;
        bool maximal = true;
        for (int w = 0; w < n && maximal; ++w) {
            if (mask & (1u << w)) continue;
            bool extends = true;
            for (int v : vs)
                if (!g.adjacent(v, w)) {
                    extends = false;
                    break;
                }
            if (extends) maximal = false;
        }
        if (maximal) cliques.push_back(vs);
    }
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

inline bool brute_two_colorable(const Graph& g) {
    int n = g.vertex_count();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (((mask >> u) & 1) == ((mask >> v) & 1)) {
                proper = false;
                break;
            }
        if (proper) return true;
    }
    return n == 0;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution flip(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) g.add_edge(u, v);
    return g;
}

inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
    for (;;) {
        Graph g = random_graph(rng, n, p);
        if (is_connected(g)) return g;
    }
}

// Nonzero, non-uniform complex amplitudes with unit norm.
inline PolygonStateVector random_polygon_vector(std::mt19937& rng, const VertexSubset& polygon) {
    std::uniform_real_distribution<double> mag(0.25, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    std::vector<Complex> amps;
    for (size_t i = 0; i < polygon.size(); ++i) amps.push_back(std::polar(mag(rng), phase(rng)));
    return make_polygon_vector(polygon, std::move(amps));
}

inline std::vector<PolygonStateVector> random_vectors(std::mt19937& rng, const Tessellation& t) {
    std::vector<PolygonStateVector> out;
    for (const auto& poly : t.polygons) out.push_back(random_polygon_vector(rng, poly));
    return out;
}

inline StateVector random_state(std::mt19937& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector s(dim);
    for (auto& a : s) a = Complex{gauss(rng), gauss(rng)};
    double inv = 1.0 / norm(s);
    for (auto& a : s) a *= inv;
    return s;
}

// Dense reflection built the slow way, by outer products.
inline ComplexMatrix dense_reflection_oracle(int dim,
                                             const std::vector<PolygonStateVector>& vectors) {
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Complex{-1, 0};
    for (const auto& vec : vectors) {
        const auto& poly = vec.polygon();
        const auto& amp = vec.amplitudes();
        for (size_t a = 0; a < poly.size(); ++a)
            for (size_t b = 0; b < poly.size(); ++b)
                m.at(poly[a], poly[b]) += 2.0 * amp[a] * std::conj(amp[b]);
    }
    return m;
}

// The worked 5x5 walk operator, entries times 1/6.
inline ComplexMatrix golden_five_by_five() {
    const double e[5][5] = {{3, -3, 3, 3, 0},
                            {-3, 3, 3, 3, 0},
                            {1, 1, 3, -3, 4},
                            {1, 1, -3, 3, 4},
                            {4, 4, 0, 0, -2}};
    ComplexMatrix m(5, 5);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) m.at(r, c) = Complex{e[r][c] / 6.0, 0};
    return m;
}

// Blue {0,1,2,3},{4}; red {0,1},{2,3,4}.
inline TessellationPair fig1_pair() {
    return TessellationPair{Tessellation{{{0, 1, 2, 3}, {4}}}, Tessellation{{{0, 1}, {2, 3, 4}}}};
}

// Barbell tessellations: (a) has two edges in the tessellation
// intersection, (b) none (its union is the 2-colorable Krausz partition).
inline TessellationPair barbell_pair_a() {
    return TessellationPair{Tessellation{{{0, 1, 2}, {3, 4, 5}}},
                            Tessellation{{{0, 1}, {2, 3}, {4, 5}}}};
}

inline TessellationPair barbell_pair_b() {
    return TessellationPair{Tessellation{{{0, 1, 2}, {3, 4, 5}}},
                            Tessellation{{{2, 3}, {0}, {1}, {4}, {5}}}};
}

} // namespace sqw::test
