#include "sqw/graph.hpp"

#include <algorithm>
#include <numeric>

#include "sqw/constants.hpp"

namespace sqw {

Graph::Graph(int vertex_count) : n_(vertex_count), adj_(vertex_count) {
    if (vertex_count < 0) fail("OutOfRange", "negative vertex count");
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) fail("OutOfRange", "vertex " + std::to_string(v));
    return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = neighbors(u);
    if (v < 0 || v >= n_) fail("OutOfRange", "vertex " + std::to_string(v));
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        fail("OutOfRange", "edge endpoint outside 0.." + std::to_string(n_ - 1));
    if (u == v) fail("SelfLoop", "vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it != edges_.end() && *it == std::make_pair(u, v))
        fail("DuplicateEdge", std::to_string(u) + "-" + std::to_string(v));
    edges_.insert(it, {u, v});
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

void Graph::set_label(int v, std::string label) {
    if (v < 0 || v >= n_) fail("OutOfRange", "vertex " + std::to_string(v));
    if (labels_.empty()) labels_.resize(n_);
    labels_[v] = std::move(label);
}

const std::string& Graph::label(int v) const {
    static const std::string empty;
    if (v < 0 || v >= n_) fail("OutOfRange", "vertex " + std::to_string(v));
    return labels_.empty() ? empty : labels_[v];
}

Graph graph_from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    Graph g(n);
    for (auto [u, v] : pairs) g.add_edge(u, v);
    return g;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

namespace {

// Pivoted Bron-Kerbosch. P, X are sorted; R accumulates the current clique.
void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<VertexSubset>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of P∪X with most neighbors in P.
    int pivot = -1, best = -1;
    for (const auto* side : {&p, &x}) {
        for (int u : *side) {
            int cnt = 0;
            for (int v : p)
                if (g.adjacent(u, v)) ++cnt;
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
    }
    std::vector<int> candidates;
    for (int v : p)
        if (pivot < 0 || !g.adjacent(pivot, v)) candidates.push_back(v);
    for (int v : candidates) {
        std::vector<int> p2, x2;
        for (int w : p)
            if (g.adjacent(v, w)) p2.push_back(w);
        for (int w : x)
            if (g.adjacent(v, w)) x2.push_back(w);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

} // namespace

std::vector<VertexSubset> maximal_cliques(const Graph& g, int guard) {
    if (g.vertex_count() > guard)
        fail("TooLarge", "maximal_cliques guard is " + std::to_string(guard) + " vertices");
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    std::vector<VertexSubset> out;
    std::vector<int> r;
    bron_kerbosch(g, r, all, {}, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

CliqueGraph clique_graph(const Graph& g, int guard) {
    auto cliques = maximal_cliques(g, guard);
    int m = static_cast<int>(cliques.size());
    Graph kg(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            bool share = false;
            for (int v : cliques[i]) {
                if (std::binary_search(cliques[j].begin(), cliques[j].end(), v)) {
                    share = true;
                    break;
                }
            }
            if (share) kg.add_edge(i, j);
        }
    }
    return {std::move(kg), std::move(cliques)};
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt; // odd cycle
                }
            }
        }
    }
    return color;
}

LineGraphResult line_graph(const Graph& g) {
    if (g.edge_count() == 0) fail("NoEdges", "line graph needs at least one edge");
    const auto& edges = g.edges();
    int m = static_cast<int>(edges.size());
    Graph lg(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) lg.add_edge(i, j);
        }
    }
    return {std::move(lg), EdgeVertexMap{edges}};
}

namespace {

// Backtracking induced-subgraph search. Pattern vertices are visited in an
// order where each one (after the first of its component) has a previously
// mapped neighbor, so candidates come from host adjacency lists.
struct InducedSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;    // pattern vertices in visit order
    std::vector<int> anchor;   // index into order of a mapped neighbor, or -1
    std::vector<int> map;      // pattern -> host (-1 unmapped)
    std::vector<char> used;    // host vertex already an image

    InducedSearch(const Graph& h, const Graph& p) : host(h), pattern(p) {
        int n = p.vertex_count();
        map.assign(n, -1);
        used.assign(h.vertex_count(), 0);
        std::vector<char> placed(n, 0);
        while (static_cast<int>(order.size()) < n) {
            int next = -1, from = -1;
            for (size_t i = 0; i < order.size() && next < 0; ++i) {
                for (int w : p.neighbors(order[i])) {
                    if (!placed[w]) {
                        next = w;
                        from = static_cast<int>(i);
                        break;
                    }
                }
            }
            if (next < 0) { // new component: highest-degree unplaced vertex
                for (int v = 0; v < n; ++v)
                    if (!placed[v] && (next < 0 || p.degree(v) > p.degree(next))) next = v;
                from = -1;
            }
            placed[next] = 1;
            order.push_back(next);
            anchor.push_back(from);
        }
    }

    bool consistent(int pv, int hv) const {
        if (host.degree(hv) < pattern.degree(pv)) return false;
        for (int q = 0; q < pattern.vertex_count(); ++q) {
            if (map[q] < 0) continue;
            if (pattern.adjacent(pv, q) != host.adjacent(hv, map[q])) return false;
        }
        return true;
    }

    bool extend(size_t depth) {
        if (depth == order.size()) return true;
        int pv = order[depth];
        if (anchor[depth] >= 0) {
            int base = map[order[anchor[depth]]];
            for (int hv : host.neighbors(base)) {
                if (used[hv] || !consistent(pv, hv)) continue;
                map[pv] = hv;
                used[hv] = 1;
                if (extend(depth + 1)) return true;
                map[pv] = -1;
                used[hv] = 0;
            }
        } else {
            for (int hv = 0; hv < host.vertex_count(); ++hv) {
                if (used[hv] || !consistent(pv, hv)) continue;
                map[pv] = hv;
                used[hv] = 1;
                if (extend(depth + 1)) return true;
                map[pv] = -1;
                used[hv] = 0;
            }
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_induced_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    if (pattern.vertex_count() == 0) return std::vector<int>{};
    InducedSearch s(host, pattern);
    if (!s.extend(0)) return std::nullopt;
    return s.map;
}

bool is_diamond_free(const Graph& g, int guard) {
    // Route 1: induced-diamond scan.
    Graph diamond(4);
    diamond.add_edge(0, 1);
    diamond.add_edge(0, 2);
    diamond.add_edge(0, 3);
    diamond.add_edge(1, 2);
    diamond.add_edge(1, 3);
    bool scan_free = !find_induced_subgraph(g, diamond).has_value();

    // Route 2: every edge lies in exactly one maximal clique.
    auto cliques = maximal_cliques(g, guard);
    bool count_free = true;
    for (auto [u, v] : g.edges()) {
        int hits = 0;
        for (const auto& c : cliques) {
            if (std::binary_search(c.begin(), c.end(), u) &&
                std::binary_search(c.begin(), c.end(), v))
                ++hits;
        }
        if (hits != 1) {
            count_free = false;
            break;
        }
    }
    if (scan_free != count_free)
        throw std::logic_error("diamond-free characterizations disagree");
    return scan_free;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() > kIsoCap || b.vertex_count() > kIsoCap)
        fail("TooLarge", "isomorphism cap is " + std::to_string(kIsoCap) + " vertices");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto degs = [](const Graph& g) {
        std::vector<int> d(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;
    // An induced embedding between equal-size graphs with equal edge counts
    // is a bijection preserving adjacency both ways.
    return find_induced_subgraph(b, a).has_value();
}

} // namespace sqw
