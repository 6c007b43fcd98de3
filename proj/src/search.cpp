#include "sqw/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sqw/constants.hpp"

namespace sqw {

SearchInstance torus_instance(int n, int marked_x, int marked_y) {
    if (n < 2) fail("TooSmall", "torus needs n >= 2");
    marked_x = (marked_x % n + n) % n;
    marked_y = (marked_y % n + n) % n;

    Graph g(8 * n * n);
    auto idx = [n](int x, int y, int k) { return ((x % n + n) % n * n + (y % n + n) % n) * 8 + k; };

    Tessellation blue, red;
    std::vector<int> marked;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int a = 0; a < 8; ++a) {
                g.set_label(idx(x, y, a), "(" + std::to_string(x) + "," + std::to_string(y) +
                                              "," + std::to_string(a) + ")");
                for (int b = a + 1; b < 8; ++b)
                    if (g.edge_index(idx(x, y, a), idx(x, y, b)) < 0)
                        g.add_edge(idx(x, y, a), idx(x, y, b));
            }
            VertexSubset octet;
            for (int k = 0; k < 8; ++k) octet.push_back(idx(x, y, k));
            std::sort(octet.begin(), octet.end());
            if (x == marked_x && y == marked_y)
                marked = octet; // no blue polygon on the marked cell
            else
                blue.polygons.push_back(std::move(octet));

            VertexSubset beta0{idx(x, y, 0), idx(x, y, 7), idx(x + 1, y, 3), idx(x + 1, y, 4)};
            VertexSubset beta1{idx(x, y, 1), idx(x, y, 2), idx(x, y + 1, 5), idx(x, y + 1, 6)};
            for (auto* beta : {&beta0, &beta1}) {
                std::sort(beta->begin(), beta->end());
                for (size_t a = 0; a < beta->size(); ++a)
                    for (size_t b = a + 1; b < beta->size(); ++b)
                        if (g.edge_index((*beta)[a], (*beta)[b]) < 0)
                            g.add_edge((*beta)[a], (*beta)[b]);
                red.polygons.push_back(*beta);
            }
        }
    }

    if (validate_partial_tessellation(g, blue) || validate_tessellation(g, red))
        throw std::logic_error("torus tessellations violate their invariants");
    EvolutionOperator walk{
        ReflectionOperator(g.vertex_count(), uniform_vectors(blue)),
        ReflectionOperator(g.vertex_count(), uniform_vectors(red)),
    };
    return SearchInstance{n,     marked_x,       marked_y, std::move(g), std::move(blue),
                          std::move(red), std::move(marked), std::move(walk)};
}

StateVector uniform_state(int dim) {
    if (dim < 1) fail("BadParams", "state needs a positive dimension");
    double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    return StateVector(dim, Complex{amp, 0});
}

SearchResult run_search(const SearchInstance& inst, int t_max) {
    if (t_max < 1) fail("BadParams", "t_max must be at least 1");
    StateVector state = uniform_state(inst.dim());
    SearchResult result;
    result.probability.reserve(t_max + 1);
    result.raw_sum.reserve(t_max + 1);
    auto record = [&] {
        double p = 0;
        Complex sum{0, 0};
        for (int v : inst.marked) {
            p += std::norm(state[v]);
            sum += state[v];
        }
        result.probability.push_back(p);
        result.raw_sum.push_back(sum);
    };
    record();
    for (int t = 0; t < t_max; ++t) {
        inst.walk.u0.apply_in_place(state);
        inst.walk.u1.apply_in_place(state);
        record();
    }
    return result;
}

std::pair<int, double> peak(const std::vector<double>& series) {
    if (series.size() < 3) fail("BadParams", "peak detection needs at least 3 samples");
    // Local maximum over runs of equal values: these walks hold p(t) flat
    // for two consecutive steps (equal up to rounding), so a plateau counts
    // as one sample and its first index is returned. 1e-9 separates rounding
    // noise from genuine level changes, which sit at 1e-3 and above.
    constexpr double run_eps = 1e-9;
    std::vector<std::pair<double, int>> runs; // value, first index
    for (size_t t = 0; t < series.size(); ++t)
        if (runs.empty() || std::abs(series[t] - runs.back().first) > run_eps)
            runs.push_back({series[t], static_cast<int>(t)});
    for (size_t r = 1; r + 1 < runs.size(); ++r) {
        if (runs[r].first > runs[r - 1].first && runs[r].first > runs[r + 1].first &&
            runs[r].first > series[0])
            return {runs[r].second, runs[r].first};
    }
    fail("NoPeak", "no local maximum above p(0)");
}

LineFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) fail("BadParams", "line fit needs >= 2 points");
    double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0) fail("BadParams", "degenerate abscissas");
    LineFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double r = y[i] - (fit.slope * x[i] + fit.intercept);
        ss += r * r;
    }
    fit.rms = std::sqrt(ss / n);
    return fit;
}

ScalingFit scaling_experiment(const std::vector<int>& n_values, int t_max) {
    if (n_values.size() < 4) fail("BadParams", "scaling fit needs at least 4 sizes");
    ScalingFit fit;
    for (int n : n_values) {
        SearchInstance inst = torus_instance(n);
        int steps = t_max > 0
                        ? t_max
                        : 100 + 2 * static_cast<int>(std::ceil(std::sqrt(inst.dim())));
        SearchResult result = run_search(inst, steps);
        try {
            auto [t_star, p_star] = peak(result.probability);
            fit.used_n.push_back(n);
            fit.t_star.push_back(t_star);
            fit.p_star.push_back(p_star);
        } catch (const Error& e) {
            fit.warnings.push_back("n=" + std::to_string(n) + " skipped: " + e.code());
        }
    }
    if (fit.used_n.size() < 4) fail("NoPeak", "fewer than 4 instances produced a peak");

    std::vector<double> ln_n, ln_t, lnln_n, ln_inv_p;
    for (size_t i = 0; i < fit.used_n.size(); ++i) {
        double big_n = 8.0 * fit.used_n[i] * fit.used_n[i];
        ln_n.push_back(std::log(big_n));
        ln_t.push_back(std::log(static_cast<double>(fit.t_star[i])));
        lnln_n.push_back(std::log(std::log(big_n)));
        ln_inv_p.push_back(std::log(1.0 / fit.p_star[i]));
    }
    LineFit time_fit = least_squares_line(ln_n, ln_t);
    fit.b = time_fit.slope;
    fit.a = std::exp(time_fit.intercept);
    fit.residual_t = time_fit.rms;
    LineFit prob_fit = least_squares_line(lnln_n, ln_inv_p);
    fit.d = prob_fit.slope;
    fit.c = std::exp(-prob_fit.intercept);
    fit.residual_p = prob_fit.rms;
    return fit;
}

double amplified_cost(double t_star, double p_star) {
    if (p_star <= 0) fail("ZeroProbability", "amplification needs p* > 0");
    return t_star / std::sqrt(p_star);
}

double random_walk_hitting_time(const SearchInstance& inst, int trials, std::uint64_t seed) {
    if (trials < 1) fail("BadParams", "need at least one trial");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> start(0, inst.dim() - 1);
    std::vector<char> is_marked(inst.dim(), 0);
    for (int v : inst.marked) is_marked[v] = 1;
    double total = 0;
    for (int trial = 0; trial < trials; ++trial) {
        int v = start(rng);
        long steps = 0;
        while (!is_marked[v]) {
            const auto& nb = inst.graph.neighbors(v);
            v = nb[std::uniform_int_distribution<size_t>(0, nb.size() - 1)(rng)];
            ++steps;
        }
        total += static_cast<double>(steps);
    }
    return total / trials;
}

} // namespace sqw
