#include "sqw/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sqw {

namespace {

VertexSubset sorted(std::initializer_list<int> vs) {
    VertexSubset out(vs);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

int honeycomb_index(const HoneycombModel& model, int x, int y, int i, int k) {
    int m = model.m;
    x = (x % m + m) % m;
    y = (y % m + m) % m;
    return ((x * m + y) * 2 + i) * 3 + k;
}

HoneycombModel honeycomb(int m) {
    if (m < 2) fail("TooSmall", "honeycomb needs m >= 2");
    if (m % 2 != 0) fail("OddM", "hexagon count per direction must be even");

    HoneycombModel model;
    model.m = m;
    model.graph = Graph(6 * m * m);
    auto idx = [&](int x, int y, int i, int k) { return honeycomb_index(model, x, y, i, k); };

    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            for (int i = 0; i < 2; ++i) {
                model.graph.add_edge(idx(x, y, i, 0), idx(x, y, i, 1));
                model.graph.add_edge(idx(x, y, i, 0), idx(x, y, i, 2));
                model.graph.add_edge(idx(x, y, i, 1), idx(x, y, i, 2));
                model.tessellations.blue.polygons.push_back(
                    {idx(x, y, i, 0), idx(x, y, i, 1), idx(x, y, i, 2)});
                for (int k = 0; k < 3; ++k)
                    model.graph.set_label(idx(x, y, i, k),
                                          "(" + std::to_string(x) + "," + std::to_string(y) +
                                              "," + std::to_string(i) + "," + std::to_string(k) +
                                              ")");
            }
            for (int k = 0; k < 3; ++k) {
                int partner = idx(x - (k == 1 ? 1 : 0), y - (k == 2 ? 1 : 0), 1, k);
                model.graph.add_edge(idx(x, y, 0, k), partner);
                model.tessellations.red.polygons.push_back(sorted({idx(x, y, 0, k), partner}));
            }
        }
    }
    return model;
}

EvolutionOperator honeycomb_walk(const HoneycombModel& model) {
    return honeycomb_walk(model, uniform_vectors(model.tessellations.blue));
}

EvolutionOperator honeycomb_walk(const HoneycombModel& model,
                                 const std::vector<PolygonStateVector>& blue_vectors) {
    return make_walk(model.graph, model.tessellations, blue_vectors,
                     uniform_vectors(model.tessellations.red));
}

ComplexMatrix three_state_coin(double rho) {
    if (rho <= 0 || rho >= 1) fail("BadRho", "rho must lie in (0,1)");
    double s = rho * std::sqrt(2 - 2 * rho * rho);
    ComplexMatrix c(3, 3);
    c.at(0, 0) = -rho * rho;
    c.at(0, 1) = s;
    c.at(0, 2) = 1 - rho * rho;
    c.at(1, 0) = s;
    c.at(1, 1) = 2 * rho * rho - 1;
    c.at(1, 2) = s;
    c.at(2, 0) = 1 - rho * rho;
    c.at(2, 1) = s;
    c.at(2, 2) = -rho * rho;
    return c;
}

ThreeStateModel three_state(int sites, double rho) {
    if (sites < 3) fail("TooSmall", "ring needs at least 3 sites");
    if (rho <= 0 || rho >= 1) fail("BadRho", "rho must lie in (0,1)");

    ThreeStateModel model;
    model.sites = sites;
    model.rho = rho;
    double side = std::sqrt((1 - rho * rho) / 2);
    model.alpha_rho = {Complex{side, 0}, Complex{rho, 0}, Complex{side, 0}};

    // C = 2|alpha><alpha| - I; kept alongside the closed form for the tests.
    model.coin = ComplexMatrix(3, 3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            model.coin.at(a, b) =
                2.0 * model.alpha_rho[a] * std::conj(model.alpha_rho[b]) - (a == b ? 1.0 : 0.0);

    model.graph = Graph(3 * sites);
    auto idx = [&](int n, int i) { return ((n % sites + sites) % sites) * 3 + i; };
    for (int n = 0; n < sites; ++n) {
        model.graph.add_edge(idx(n, 0), idx(n, 1));
        model.graph.add_edge(idx(n, 0), idx(n, 2));
        model.graph.add_edge(idx(n, 1), idx(n, 2));
        model.graph.add_edge(idx(n, 0), idx(n + 1, 2));
        model.tessellations.blue.polygons.push_back({idx(n, 0), idx(n, 1), idx(n, 2)});
        model.tessellations.red.polygons.push_back(sorted({idx(n, 0), idx(n + 1, 2)}));
        model.tessellations.red.polygons.push_back({idx(n, 1)});
        for (int i = 0; i < 3; ++i)
            model.graph.set_label(idx(n, i),
                                  "(" + std::to_string(n) + "," + std::to_string(i) + ")");
    }
    return model;
}

EvolutionOperator three_state_walk(const ThreeStateModel& model) {
    std::vector<PolygonStateVector> blue;
    for (const auto& poly : model.tessellations.blue.polygons)
        blue.emplace_back(poly, model.alpha_rho);
    return make_walk(model.graph, model.tessellations, blue,
                     uniform_vectors(model.tessellations.red));
}

} // namespace sqw
