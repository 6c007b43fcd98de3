#include "sqw/szegedy.hpp"

#include <algorithm>
#include <cmath>

#include "sqw/constants.hpp"

namespace sqw {

namespace {

void check_stochastic(const RealMatrix& mat, const char* which) {
    for (int r = 0; r < mat.rows; ++r) {
        double sum = 0;
        for (int c = 0; c < mat.cols; ++c) {
            if (mat.at(r, c) < 0) fail("NotStochastic", std::string(which) + " has a negative entry");
            sum += mat.at(r, c);
        }
        if (std::abs(sum - 1.0) > kNormTol)
            fail("NotStochastic", std::string(which) + " row " + std::to_string(r));
    }
}

SzegedyInstance assemble(const RealMatrix& p, const RealMatrix& q, const RealMatrix& theta,
                         const RealMatrix& theta_prime,
                         std::vector<std::pair<int, int>> t_map) {
    int m = p.rows, n = p.cols;
    check_stochastic(p, "P");
    check_stochastic(q, "Q");
    if (q.rows != n || q.cols != m) fail("DimensionMismatch", "Q must be n x m");
    if (theta.rows != m || theta.cols != n || theta_prime.rows != m || theta_prime.cols != n)
        fail("DimensionMismatch", "phase arrays must be m x n");
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b)
            if ((p.at(a, b) != 0) != (q.at(b, a) != 0))
                fail("SupportMismatch", "P' and Q'^T differ at (" + std::to_string(a) + "," +
                                            std::to_string(b) + ")");

    // Default T: supports in row-major order.
    if (t_map.empty()) {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < n; ++b)
                if (p.at(a, b) != 0) t_map.push_back({a, b});
    }

    Graph root(m + n);
    for (auto [a, b] : t_map) root.add_edge(a, m + b);

    auto flat = [n](int a, int b) { return a * n + b; };
    std::vector<PolygonStateVector> phi, psi;
    for (int a = 0; a < m; ++a) {
        VertexSubset support;
        std::vector<Complex> amp;
        for (int b = 0; b < n; ++b) {
            if (p.at(a, b) == 0) continue;
            support.push_back(flat(a, b));
            amp.push_back(std::polar(std::sqrt(p.at(a, b)), theta.at(a, b)));
        }
        phi.emplace_back(std::move(support), std::move(amp));
    }
    for (int b = 0; b < n; ++b) {
        VertexSubset support;
        std::vector<Complex> amp;
        for (int a = 0; a < m; ++a) {
            if (q.at(b, a) == 0) continue;
            support.push_back(flat(a, b));
            amp.push_back(std::polar(std::sqrt(q.at(b, a)), theta_prime.at(a, b)));
        }
        psi.emplace_back(std::move(support), std::move(amp));
    }
    int dim = m * n;
    return SzegedyInstance{m,
                           n,
                           p,
                           q,
                           theta,
                           theta_prime,
                           std::move(t_map),
                           std::move(root),
                           ReflectionOperator(dim, std::move(phi)),
                           ReflectionOperator(dim, std::move(psi))};
}

} // namespace

SzegedyInstance szegedy_from_matrices(const RealMatrix& p, const RealMatrix& q,
                                      const RealMatrix& theta, const RealMatrix& theta_prime) {
    return assemble(p, q, theta, theta_prime, {});
}

SzegedyInstance szegedy_from_matrices(const RealMatrix& p, const RealMatrix& q) {
    RealMatrix zeros(p.rows, p.cols);
    return assemble(p, q, zeros, zeros, {});
}

SzegedyInstance szegedy_convert(const Graph& g, const TessellationPair& pair,
                                const std::vector<PolygonStateVector>& blue_vectors,
                                const std::vector<PolygonStateVector>& red_vectors) {
    require_valid_tessellation(g, pair.blue);
    require_valid_tessellation(g, pair.red);
    if (!union_covers_edges(g, pair)) fail("UncoveredEdge", "tessellation union misses edges");
    auto crossing = intersection_edges(g, pair);
    if (!crossing.empty())
        fail("EdgeInIntersection",
             "edge " + std::to_string(crossing[0].first) + "-" +
                 std::to_string(crossing[0].second) + " lies in both tessellations");
    if (pair.blue.polygons.size() != blue_vectors.size() ||
        pair.red.polygons.size() != red_vectors.size())
        fail("VectorPolygonMismatch", "one vector per polygon required");

    int m = static_cast<int>(pair.blue.polygons.size());
    int n = static_cast<int>(pair.red.polygons.size());
    int N = g.vertex_count();

    std::vector<int> blue_of(N, -1), red_of(N, -1);
    for (int i = 0; i < m; ++i)
        for (int v : pair.blue.polygons[i]) blue_of[v] = i;
    for (int j = 0; j < n; ++j)
        for (int v : pair.red.polygons[j]) red_of[v] = j;

    RealMatrix p(m, n), q(n, m), theta(m, n), theta_prime(m, n);
    std::vector<std::pair<int, int>> t_map(N);
    for (int k = 0; k < N; ++k) {
        int a = blue_of[k], b = red_of[k];
        t_map[k] = {a, b};
        const auto& bp = pair.blue.polygons[a];
        const auto& rp = pair.red.polygons[b];
        size_t bi = std::lower_bound(bp.begin(), bp.end(), k) - bp.begin();
        size_t ri = std::lower_bound(rp.begin(), rp.end(), k) - rp.begin();
        Complex ba = blue_vectors[a].amplitudes()[bi];
        Complex ra = red_vectors[b].amplitudes()[ri];
        p.at(a, b) = std::norm(ba);
        theta.at(a, b) = std::arg(ba);
        q.at(b, a) = std::norm(ra);
        theta_prime.at(a, b) = std::arg(ra);
    }
    return assemble(p, q, theta, theta_prime, std::move(t_map));
}

BlockCheck verify_block_structure(const SzegedyInstance& inst, const EvolutionOperator& ev) {
    int N = static_cast<int>(inst.t_map.size());
    int dim = inst.m * inst.n;
    if (ev.dim() != N) fail("DimensionMismatch", "instance does not match the walk dimension");

    // Basis order: T-images by original vertex index, then idle flat indices.
    std::vector<int> perm;
    perm.reserve(dim);
    std::vector<char> is_image(dim, 0);
    for (const auto& [a, b] : inst.t_map) {
        int f = a * inst.n + b;
        perm.push_back(f);
        is_image[f] = 1;
    }
    for (int f = 0; f < dim; ++f)
        if (!is_image[f]) perm.push_back(f);

    ComplexMatrix w = dense_matrix(inst.walk());
    ComplexMatrix r0 = inst.r0.dense();
    ComplexMatrix u = dense_matrix(ev);
    ComplexMatrix u0 = ev.u0.dense();

    double worst = 0;
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            Complex wv = w.at(perm[r], perm[c]);
            Complex rv = r0.at(perm[r], perm[c]);
            Complex want_w, want_r;
            if (r < N && c < N) {
                want_w = u.at(r, c);
                want_r = u0.at(r, c);
            } else if (r == c) {
                want_w = Complex{1, 0};
                want_r = Complex{-1, 0};
            }
            worst = std::max(worst, std::abs(wv - want_w));
            worst = std::max(worst, std::abs(rv - want_r));
        }
    }
    return BlockCheck{worst < kOperatorTol, worst, inst.idle_dimension()};
}

} // namespace sqw
