#include "sqw/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sqw {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) continue;
            continue; // blank or comment before the header
        }
        int u, v;
        if (ls >> u >> v) pairs.push_back({u, v});
    }
    if (n < 0) fail("BadParams", "edge list is missing the vertex count");
    return graph_from_edge_list(n, pairs);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("BadParams", "cannot open " + path);
    return read_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::string out;
    if (g.has_labels()) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!g.label(v).empty())
                out += "# vertex " + std::to_string(v) + " " + g.label(v) + "\n";
    }
    out += std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

namespace {

Tessellation tessellation_from_json(const nlohmann::json& arr) {
    Tessellation t;
    for (const auto& poly : arr) {
        VertexSubset vs;
        for (const auto& v : poly) vs.push_back(v.get<int>());
        t.polygons.push_back(std::move(vs));
    }
    return t;
}

} // namespace

TessellationPair read_tessellation(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail("BadParams", std::string("tessellation file: ") + e.what());
    }
    if (!j.contains("blue") || !j.contains("red"))
        fail("BadParams", "tessellation file needs \"blue\" and \"red\" arrays");
    return TessellationPair{tessellation_from_json(j["blue"]), tessellation_from_json(j["red"])};
}

TessellationPair read_tessellation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("BadParams", "cannot open " + path);
    return read_tessellation(in);
}

std::string format_tessellation(const TessellationPair& pair) {
    // One polygon per line; parses as ordinary JSON.
    auto emit = [](const Tessellation& t) {
        std::string out = "[";
        for (size_t p = 0; p < t.polygons.size(); ++p) {
            out += p ? ",\n    [" : "\n    [";
            for (size_t i = 0; i < t.polygons[p].size(); ++i) {
                if (i) out += ", ";
                out += std::to_string(t.polygons[p][i]);
            }
            out += "]";
        }
        return out + "\n  ]";
    };
    return "{\n  \"blue\": " + emit(pair.blue) + ",\n  \"red\": " + emit(pair.red) + "\n}\n";
}

std::string format_amplitudes(const Tessellation& t,
                              const std::vector<PolygonStateVector>& vectors) {
    if (vectors.size() != t.polygons.size())
        fail("VectorPolygonMismatch", "one vector per polygon required");
    std::string out = "polygon_index,vertex,re,im\n";
    for (size_t pi = 0; pi < vectors.size(); ++pi) {
        const auto& poly = vectors[pi].polygon();
        const auto& amp = vectors[pi].amplitudes();
        for (size_t i = 0; i < poly.size(); ++i)
            out += std::to_string(pi) + "," + std::to_string(poly[i]) + "," +
                   fmt_double(amp[i].real()) + "," + fmt_double(amp[i].imag()) + "\n";
    }
    return out;
}

std::vector<PolygonStateVector> read_amplitudes(std::istream& in, const Tessellation& t) {
    std::vector<std::vector<Complex>> amps(t.polygons.size());
    for (size_t i = 0; i < t.polygons.size(); ++i)
        amps[i].assign(t.polygons[i].size(), Complex{0, 0});

    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != 4) fail("BadParams", "amplitude row needs 4 columns: " + line);
        int pi = std::stoi(cells[0]);
        int v = std::stoi(cells[1]);
        if (pi < 0 || pi >= static_cast<int>(t.polygons.size()))
            fail("OutOfRange", "polygon index " + cells[0]);
        const auto& poly = t.polygons[pi];
        auto it = std::lower_bound(poly.begin(), poly.end(), v);
        if (it == poly.end() || *it != v)
            fail("VectorPolygonMismatch", "vertex " + cells[1] + " not in polygon " + cells[0]);
        amps[pi][it - poly.begin()] = Complex{std::stod(cells[2]), std::stod(cells[3])};
    }
    std::vector<PolygonStateVector> out;
    for (size_t i = 0; i < t.polygons.size(); ++i)
        out.push_back(make_polygon_vector(t.polygons[i], std::move(amps[i])));
    return out;
}

std::vector<PolygonStateVector> read_amplitudes_file(const std::string& path,
                                                     const Tessellation& t) {
    std::ifstream in(path);
    if (!in) fail("BadParams", "cannot open " + path);
    return read_amplitudes(in, t);
}

std::string format_complex_entry(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gj", z.real(), z.imag());
    return buf;
}

Complex parse_complex_entry(const std::string& text) {
    // re|re+imj|re-imj; the imaginary part always carries a sign.
    size_t split = std::string::npos;
    for (size_t i = 1; i < text.size(); ++i) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E')
            split = i;
    }
    if (split == std::string::npos || text.back() != 'j')
        fail("BadParams", "bad complex entry: " + text);
    double re = std::stod(text.substr(0, split));
    double im = std::stod(text.substr(split, text.size() - split - 1));
    return {re, im};
}

std::string format_dense_csv(const ComplexMatrix& m) {
    std::string out;
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) out += ",";
            out += format_complex_entry(m.at(r, c));
        }
        out += "\n";
    }
    return out;
}

ComplexMatrix read_dense_csv(std::istream& in) {
    std::vector<std::vector<Complex>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<Complex> row;
        while (std::getline(ls, cell, ',')) row.push_back(parse_complex_entry(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail("BadParams", "empty matrix file");
    ComplexMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols) fail("BadParams", "ragged matrix file");
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

ComplexMatrix read_dense_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("BadParams", "cannot open " + path);
    return read_dense_csv(in);
}

std::string format_series_csv(const std::vector<double>& series) {
    std::string out = "t,p\n";
    for (size_t t = 0; t < series.size(); ++t)
        out += std::to_string(t) + "," + fmt_double(series[t]) + "\n";
    return out;
}

namespace {

std::string join_subset(const VertexSubset& vs) {
    std::string out = "{";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

} // namespace

std::string classify_report(const Graph& g, const ClassEvidence& evidence) {
    std::string out;
    out += "graph: " + std::to_string(g.vertex_count()) + " vertices, " +
           std::to_string(g.edge_count()) + " edges\n";
    out += std::string("verdict: ") + to_string(evidence.label) + "\n\n";
    out += "[evidence]\n";
    out += std::string("class = ") + to_string(evidence.label) + "\n";
    if (evidence.forbidden) {
        out += "forbidden_subgraph = beineke(" + std::to_string(evidence.forbidden->forbidden_index) + ")\n";
        out += "embedding =";
        for (int v : evidence.forbidden->mapping) out += " " + std::to_string(v);
        out += "\n";
    }
    if (evidence.krausz) {
        out += "krausz_elements =";
        for (const auto& e : evidence.krausz->elements) out += " " + join_subset(e);
        out += "\n";
        if (evidence.krausz->coloring) {
            out += "krausz_coloring =";
            for (int c : *evidence.krausz->coloring) out += " " + std::to_string(c);
            out += "\n";
        }
    }
    if (evidence.root) {
        out += "root_vertices = " + std::to_string(evidence.root->root.vertex_count()) + "\n";
        out += "root_edges =";
        for (auto [u, v] : evidence.root->root.edges())
            out += " " + std::to_string(u) + "-" + std::to_string(v);
        out += "\n";
        out += "root_bipartite = ";
        out += two_coloring(evidence.root->root) ? "true" : "false";
        out += "\n";
    }
    if (evidence.two_b_prime) {
        out += "matching =";
        for (auto [u, v] : evidence.two_b_prime->matching)
            out += " " + std::to_string(u) + "-" + std::to_string(v);
        out += "\n";
        out += "complement_cliques =";
        for (const auto& c : evidence.two_b_prime->components) out += " " + join_subset(c);
        out += "\n";
    }
    return out;
}

std::string convert_report(const SzegedyInstance& inst, const BlockCheck& check) {
    std::string out;
    out += "converted to the extended bipartite double-reflection form\n\n";
    out += "[szegedy]\n";
    out += "m = " + std::to_string(inst.m) + "\n";
    out += "n = " + std::to_string(inst.n) + "\n";
    out += "vertices = " + std::to_string(inst.t_map.size()) + "\n";
    out += "idle_dimension = " + std::to_string(inst.idle_dimension()) + "\n";
    out += std::string("block_ok = ") + (check.ok ? "true" : "false") + "\n";
    out += "max_deviation = " + fmt_double(check.max_deviation) + "\n";
    out += "t_map =";
    for (auto [a, b] : inst.t_map)
        out += " " + std::to_string(a) + ":" + std::to_string(b);
    out += "\n";
    for (int a = 0; a < inst.m; ++a) {
        out += "p_row_" + std::to_string(a) + " =";
        for (int b = 0; b < inst.n; ++b) out += " " + fmt_double(inst.p.at(a, b));
        out += "\n";
    }
    for (int b = 0; b < inst.n; ++b) {
        out += "q_row_" + std::to_string(b) + " =";
        for (int a = 0; a < inst.m; ++a) out += " " + fmt_double(inst.q.at(b, a));
        out += "\n";
    }
    return out;
}

std::string fit_report(const ScalingFit& fit) {
    std::string out = "[fit]\n";
    out += "points = " + std::to_string(fit.used_n.size()) + "\n";
    out += "a = " + fmt_double(fit.a) + "\n";
    out += "b = " + fmt_double(fit.b) + "\n";
    out += "c = " + fmt_double(fit.c) + "\n";
    out += "d = " + fmt_double(fit.d) + "\n";
    out += "residual_t = " + fmt_double(fit.residual_t) + "\n";
    out += "residual_p = " + fmt_double(fit.residual_p) + "\n";
    out += "n_values =";
    for (int n : fit.used_n) out += " " + std::to_string(n);
    out += "\nt_star =";
    for (int t : fit.t_star) out += " " + std::to_string(t);
    out += "\np_star =";
    for (double p : fit.p_star) out += " " + fmt_double(p);
    out += "\n";
    for (const auto& w : fit.warnings) out += "warning = " + w + "\n";
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("BadParams", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("BadParams", "cannot write " + path);
    out << content;
}

} // namespace sqw
