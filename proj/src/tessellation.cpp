#include "sqw/tessellation.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "sqw/constants.hpp"

namespace sqw {

std::optional<TessellationViolation> validate_partial_tessellation(const Graph& g,
                                                                   const Tessellation& t) {
    int n = g.vertex_count();
    std::vector<int> owner(n, -1);
    for (int pi = 0; pi < static_cast<int>(t.polygons.size()); ++pi) {
        const auto& poly = t.polygons[pi];
        if (poly.empty()) return TessellationViolation{TessellationViolation::NotAClique, pi, -1};
        for (int v : poly) {
            if (v < 0 || v >= n) fail("OutOfRange", "polygon vertex " + std::to_string(v));
            if (owner[v] != -1)
                return TessellationViolation{TessellationViolation::Overlap, pi, v};
            owner[v] = pi;
        }
        for (size_t a = 0; a < poly.size(); ++a)
            for (size_t b = a + 1; b < poly.size(); ++b)
                if (!g.adjacent(poly[a], poly[b]))
                    return TessellationViolation{TessellationViolation::NotAClique, pi, poly[a]};
    }
    return std::nullopt;
}

std::optional<TessellationViolation> validate_tessellation(const Graph& g,
                                                           const Tessellation& t) {
    auto violation = validate_partial_tessellation(g, t);
    if (violation) return violation;
    std::vector<char> covered(g.vertex_count(), 0);
    for (const auto& poly : t.polygons)
        for (int v : poly) covered[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered[v])
            return TessellationViolation{TessellationViolation::UncoveredVertex, -1, v};
    return std::nullopt;
}

void require_valid_tessellation(const Graph& g, const Tessellation& t) {
    auto violation = validate_tessellation(g, t);
    if (!violation) return;
    switch (violation->kind) {
        case TessellationViolation::NotAClique:
            fail("NotAClique", "polygon " + std::to_string(violation->polygon));
        case TessellationViolation::Overlap:
            fail("Overlap", "vertex " + std::to_string(violation->vertex));
        case TessellationViolation::UncoveredVertex:
            fail("UncoveredVertex", "vertex " + std::to_string(violation->vertex));
    }
}

namespace {

// polygon id per vertex, assuming disjointness (validated upstream)
std::vector<int> polygon_of(const Graph& g, const Tessellation& t) {
    std::vector<int> owner(g.vertex_count(), -1);
    for (int pi = 0; pi < static_cast<int>(t.polygons.size()); ++pi)
        for (int v : t.polygons[pi]) owner[v] = pi;
    return owner;
}

} // namespace

std::vector<std::pair<int, int>> uncovered_edges(const Graph& g, const TessellationPair& pair) {
    auto blue = polygon_of(g, pair.blue);
    auto red = polygon_of(g, pair.red);
    std::vector<std::pair<int, int>> missing;
    for (auto [u, v] : g.edges()) {
        bool in_blue = blue[u] != -1 && blue[u] == blue[v];
        bool in_red = red[u] != -1 && red[u] == red[v];
        if (!in_blue && !in_red) missing.push_back({u, v});
    }
    return missing;
}

bool is_two_tessellable(const Graph& g) {
    if (!is_connected(g)) fail("Disconnected", "2-tessellability is defined for connected graphs");
    // A single clique has a one-vertex clique graph, which is 2-colorable.
    return two_coloring(clique_graph(g).graph).has_value();
}

TessellationPair build_two_tessellation(const Graph& g) {
    if (!is_connected(g)) fail("Disconnected", "2-tessellability is defined for connected graphs");
    auto kg = clique_graph(g);
    auto colors = two_coloring(kg.graph);
    if (!colors) fail("NotTwoTessellable", "clique graph has an odd cycle");

    TessellationPair pair;
    std::vector<char> taken_blue(g.vertex_count(), 0), taken_red(g.vertex_count(), 0);
    for (int color = 0; color < 2; ++color) {
        auto& tess = color == 0 ? pair.blue : pair.red;
        auto& taken = color == 0 ? taken_blue : taken_red;
        for (size_t i = 0; i < kg.cliques.size(); ++i) {
            if ((*colors)[i] != color) continue;
            VertexSubset poly;
            for (int v : kg.cliques[i]) {
                // Same-colored maximal cliques are disjoint (overlapping ones
                // are clique-graph-adjacent), so this strip never triggers;
                // it keeps the first polygon in order if it ever did.
                if (!taken[v]) {
                    taken[v] = 1;
                    poly.push_back(v);
                }
            }
            if (!poly.empty()) tess.polygons.push_back(std::move(poly));
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!taken_blue[v]) pair.blue.polygons.push_back({v});
        if (!taken_red[v]) pair.red.polygons.push_back({v});
    }
    return pair;
}

namespace {

void enumerate_partitions(const Graph& g, std::vector<int>& assigned,
                          std::vector<VertexSubset>& current,
                          std::vector<std::vector<VertexSubset>>& out) {
    int n = g.vertex_count();
    int v = -1;
    for (int i = 0; i < n; ++i) {
        if (assigned[i] == 0) {
            v = i;
            break;
        }
    }
    if (v == -1) {
        out.push_back(current);
        return;
    }
    // Every clique containing v within the unassigned vertices, built by
    // extending over unassigned neighbors with index > v.
    std::vector<int> cands;
    for (int w : g.neighbors(v))
        if (w > v && !assigned[w]) cands.push_back(w);

    std::vector<int> clique{v};
    auto recurse_clique = [&](auto&& self, size_t from) -> void {
        // use the current clique as a polygon
        for (int w : clique) assigned[w] = 1;
        current.push_back(clique);
        enumerate_partitions(g, assigned, current, out);
        current.pop_back();
        for (int w : clique) assigned[w] = 0;
        // or extend it
        for (size_t i = from; i < cands.size(); ++i) {
            int w = cands[i];
            bool ok = true;
            for (int x : clique)
                if (!g.adjacent(x, w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            clique.push_back(w);
            self(self, i + 1);
            clique.pop_back();
        }
    };
    recurse_clique(recurse_clique, 0);
}

} // namespace

std::vector<std::vector<VertexSubset>> enumerate_clique_partitions(const Graph& g) {
    if (g.vertex_count() > kBruteTessCap)
        fail("TooLarge", "exhaustive search cap is " + std::to_string(kBruteTessCap) + " vertices");
    std::vector<std::vector<VertexSubset>> out;
    std::vector<int> assigned(g.vertex_count(), 0);
    std::vector<VertexSubset> current;
    enumerate_partitions(g, assigned, current, out);
    return out;
}

bool brute_force_two_tessellable(const Graph& g) {
    auto partitions = enumerate_clique_partitions(g);
    // Compare edge-coverage masks only; |E| <= 28 at the cap.
    std::unordered_set<std::uint32_t> masks;
    std::uint32_t full = g.edge_count() == 32 ? ~0u : (1u << g.edge_count()) - 1;
    for (const auto& part : partitions) {
        std::uint32_t mask = 0;
        for (const auto& poly : part)
            for (size_t a = 0; a < poly.size(); ++a)
                for (size_t b = a + 1; b < poly.size(); ++b)
                    mask |= 1u << g.edge_index(poly[a], poly[b]);
        masks.insert(mask);
    }
    for (std::uint32_t m1 : masks)
        for (std::uint32_t m2 : masks)
            if ((m1 | m2) == full) return true;
    return false;
}

std::vector<std::pair<int, int>> intersection_edges(const Graph& g,
                                                    const TessellationPair& pair) {
    auto blue = polygon_of(g, pair.blue);
    auto red = polygon_of(g, pair.red);
    std::vector<std::pair<int, int>> result;
    for (auto [u, v] : g.edges())
        if (blue[u] != -1 && blue[u] == blue[v] && red[u] != -1 && red[u] == red[v])
            result.push_back({u, v});
    return result;
}

} // namespace sqw
