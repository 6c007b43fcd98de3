#include "sqw/coined.hpp"

#include <cmath>

#include "sqw/classify.hpp"
#include "sqw/constants.hpp"

namespace sqw {

ComplexMatrix CoinedReduction::coin_dense() const {
    int dim = 0;
    for (const auto& b : coin_blocks) dim += b.rows;
    ComplexMatrix out(dim, dim);
    int off = 0;
    for (const auto& b : coin_blocks) {
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) out.at(off + i, off + j) = b.at(i, j);
        off += b.rows;
    }
    return out;
}

ComplexMatrix CoinedReduction::shift_dense() const {
    int dim = static_cast<int>(shift.size());
    ComplexMatrix out(dim, dim);
    for (int j = 0; j < dim; ++j) out.at(shift[j], j) = Complex{1, 0};
    return out;
}

CoinedReduction coined_reduce(const Graph& g, const TessellationPair& pair,
                              const std::vector<PolygonStateVector>& blue_vectors,
                              const std::vector<PolygonStateVector>& red_vectors,
                              int vertex_cap) {
    auto evidence = classify_graph(g, vertex_cap);
    if (evidence.label != GraphClass::Class2bPrime)
        fail("NotClass2bPrime", std::string("graph is ") + to_string(evidence.label));

    require_valid_tessellation(g, pair.blue);
    require_valid_tessellation(g, pair.red);
    if (!union_covers_edges(g, pair)) fail("UncoveredEdge", "tessellation union misses edges");
    if (pair.blue.polygons.size() != blue_vectors.size() ||
        pair.red.polygons.size() != red_vectors.size())
        fail("VectorPolygonMismatch", "one vector per polygon required");

    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (size_t j = 0; j < pair.red.polygons.size(); ++j) {
        const auto& poly = pair.red.polygons[j];
        if (poly.size() > 2)
            fail("NotClass2bPrime", "red polygon " + std::to_string(j) + " is not a matching edge");
        if (poly.size() == 2) {
            for (const auto& a : red_vectors[j].amplitudes())
                if (std::abs(a - Complex{inv_sqrt2, 0}) > kNormTol)
                    fail("NonUniformMatchingVector", "red polygon " + std::to_string(j));
        }
    }

    int nv = g.vertex_count();
    CoinedReduction out;
    out.relabel.assign(nv, -1);
    out.multigraph_vertices = static_cast<int>(pair.blue.polygons.size());

    std::vector<int> blue_of(nv, -1);
    int next = 0;
    for (size_t i = 0; i < pair.blue.polygons.size(); ++i) {
        for (int v : pair.blue.polygons[i]) {
            blue_of[v] = static_cast<int>(i);
            out.relabel[v] = next++;
        }
        const auto& amp = blue_vectors[i].amplitudes();
        int d = static_cast<int>(amp.size());
        ComplexMatrix block(d, d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                block.at(a, b) = 2.0 * amp[a] * std::conj(amp[b]) - (a == b ? 1.0 : 0.0);
        out.coin_blocks.push_back(std::move(block));
        out.degrees.push_back(d);
    }

    out.shift.resize(nv);
    for (int v = 0; v < nv; ++v) out.shift[out.relabel[v]] = out.relabel[v];
    for (const auto& poly : pair.red.polygons) {
        if (poly.size() != 2) continue;
        int a = poly[0], b = poly[1];
        out.shift[out.relabel[a]] = out.relabel[b];
        out.shift[out.relabel[b]] = out.relabel[a];
        out.multigraph_edges.push_back({blue_of[a], blue_of[b]});
    }
    return out;
}

ComplexMatrix grover_coin(int d) {
    if (d < 1) fail("BadParams", "grover coin needs d >= 1");
    ComplexMatrix out(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out.at(i, j) = 2.0 / d - (i == j ? 1.0 : 0.0);
    return out;
}

} // namespace sqw
