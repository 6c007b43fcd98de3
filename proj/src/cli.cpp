#include "sqw/cli.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqw/coined.hpp"
#include "sqw/constants.hpp"
#include "sqw/io.hpp"
#include "sqw/models.hpp"
#include "sqw/named_graphs.hpp"

namespace sqw {

namespace {

constexpr const char* kVersion = "sqw 0.1.0";

struct Options {
    std::string graph_path, tess_path, out;
    std::string blue_amps, red_amps;
    std::string model_name;
    int steps = 1;
    int start = -1;
    int m = 2;
    int sites = 8;
    int torus_n = 3;
    double rho = 0.57735026918962577; // 1/sqrt(3)
    std::string n_list = "4,6,8,10,12,14,16,18,20,22,24";
    int t_max = 0;
    bool dump_raw = false;
    std::string dump_dense, state_out;
    double operator_tol = kOperatorTol;
    double norm_tol = kNormTol;
};

std::string meta_text(const std::string& command, const std::vector<std::string>& lines) {
    std::string out = std::string(kVersion) + "\ncommand = " + command + "\n";
    for (const auto& l : lines) out += l + "\n";
    return out;
}

void emit(const std::string& out_path, const std::string& content, const std::string& command,
          std::vector<std::string> meta_lines) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    write_text_file(out_path, content);
    write_text_file(out_path + ".meta", meta_text(command, std::move(meta_lines)));
}

std::vector<std::string> tolerance_warnings(const Options& opt) {
    std::vector<std::string> lines;
    if (opt.operator_tol != kOperatorTol)
        lines.push_back("warning = operator tolerance overridden to " +
                        std::to_string(opt.operator_tol));
    if (opt.norm_tol != kNormTol)
        lines.push_back("warning = norm tolerance overridden to " + std::to_string(opt.norm_tol));
    return lines;
}

Graph load_graph(const Options& opt) {
    if (opt.graph_path.rfind("named:", 0) == 0)
        return named_graph(opt.graph_path.substr(6));
    return read_edge_list_file(opt.graph_path);
}

struct WalkInputs {
    Graph graph;
    TessellationPair pair;
    std::vector<PolygonStateVector> blue, red;
};

WalkInputs load_walk_inputs(const Options& opt) {
    WalkInputs in{load_graph(opt), read_tessellation_file(opt.tess_path), {}, {}};
    in.blue = opt.blue_amps.empty() ? uniform_vectors(in.pair.blue)
                                    : read_amplitudes_file(opt.blue_amps, in.pair.blue);
    in.red = opt.red_amps.empty() ? uniform_vectors(in.pair.red)
                                  : read_amplitudes_file(opt.red_amps, in.pair.red);
    return in;
}

int run_classify(const Options& opt) {
    Graph g = load_graph(opt);
    auto evidence = classify_graph(g);
    emit(opt.out, classify_report(g, evidence), "classify",
         {"graph = " + opt.graph_path});
    return 0;
}

int run_tessellate(const Options& opt) {
    Graph g = load_graph(opt);
    auto pair = build_two_tessellation(g);
    emit(opt.out, format_tessellation(pair), "tessellate", {"graph = " + opt.graph_path});
    return 0;
}

int run_evolve(const Options& opt) {
    auto in = load_walk_inputs(opt);
    EvolutionOperator walk = make_walk(in.graph, in.pair, in.blue, in.red);
    auto meta = tolerance_warnings(opt);
    meta.push_back("graph = " + opt.graph_path);
    meta.push_back("tess = " + opt.tess_path);

    if (!opt.dump_dense.empty()) {
        write_text_file(opt.dump_dense, format_dense_csv(dense_matrix(walk)));
        write_text_file(opt.dump_dense + ".meta", meta_text("evolve --dump-dense", meta));
    }
    if (!opt.state_out.empty() || opt.dump_dense.empty()) {
        StateVector state = opt.start >= 0 ? basis_state(walk.dim(), opt.start)
                                           : uniform_state(walk.dim());
        for (int t = 0; t < opt.steps; ++t) state = apply_step(walk, state);
        double drift = std::abs(norm(state) - 1.0);
        if (drift > opt.norm_tol * opt.steps)
            fail("NormDrift", "norm drift " + std::to_string(drift) + " after " +
                                  std::to_string(opt.steps) + " steps");
        std::string csv = "vertex,re,im\n";
        for (int v = 0; v < walk.dim(); ++v) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", v, state[v].real(),
                          state[v].imag());
            csv += buf;
        }
        emit(opt.state_out, csv, "evolve", meta);
    }
    return 0;
}

int run_convert(const Options& opt) {
    auto in = load_walk_inputs(opt);
    EvolutionOperator walk = make_walk(in.graph, in.pair, in.blue, in.red);
    SzegedyInstance inst = szegedy_convert(in.graph, in.pair, in.blue, in.red);
    BlockCheck check = verify_block_structure(inst, walk);
    check.ok = check.max_deviation < opt.operator_tol;
    auto meta = tolerance_warnings(opt);
    meta.push_back("graph = " + opt.graph_path);
    meta.push_back("tess = " + opt.tess_path);
    emit(opt.out, convert_report(inst, check), "convert", meta);
    return 0;
}

int run_model(const Options& opt) {
    Graph graph;
    TessellationPair pair;
    if (opt.model_name == "honeycomb") {
        auto model = honeycomb(opt.m);
        graph = model.graph;
        pair = model.tessellations;
    } else if (opt.model_name == "three-state") {
        auto model = three_state(opt.sites, opt.rho);
        graph = model.graph;
        pair = model.tessellations;
    } else if (opt.model_name == "torus-search") {
        auto inst = torus_instance(opt.torus_n);
        graph = inst.graph;
        pair = TessellationPair{inst.blue, inst.red};
    } else {
        fail("UnknownName", opt.model_name);
    }
    namespace fs = std::filesystem;
    fs::create_directories(opt.out);
    std::string base = (fs::path(opt.out) / opt.model_name).string();
    write_text_file(base + ".edges", format_edge_list(graph));
    write_text_file(base + ".tess", format_tessellation(pair));
    write_text_file(base + ".meta",
                    meta_text("model", {"name = " + opt.model_name,
                                        "m = " + std::to_string(opt.m),
                                        "sites = " + std::to_string(opt.sites),
                                        "rho = " + std::to_string(opt.rho),
                                        "n = " + std::to_string(opt.torus_n)}));
    return 0;
}

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!token.empty()) out.push_back(std::stoi(token));
            token.clear();
        } else {
            token += ch;
        }
    }
    if (out.empty()) fail("BadParams", "empty n list");
    return out;
}

int run_search_cmd(const Options& opt) {
    namespace fs = std::filesystem;
    if (opt.out.empty()) fail("BadParams", "search needs --out");
    fs::create_directories(opt.out);
    auto ns = parse_n_list(opt.n_list);

    for (int n : ns) {
        SearchInstance inst = torus_instance(n);
        int steps = opt.t_max > 0
                        ? opt.t_max
                        : 100 + 2 * static_cast<int>(std::ceil(std::sqrt(inst.dim())));
        SearchResult result = run_search(inst, steps);
        std::string base = (fs::path(opt.out) / ("search_n" + std::to_string(n))).string();
        write_text_file(base + ".csv", format_series_csv(result.probability));
        if (opt.dump_raw) {
            std::string raw = "t,re,im\n";
            for (size_t t = 0; t < result.raw_sum.size(); ++t) {
                char buf[96];
                std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", t, result.raw_sum[t].real(),
                              result.raw_sum[t].imag());
                raw += buf;
            }
            write_text_file(base + "_raw.csv", raw);
        }
    }
    ScalingFit fit = scaling_experiment(ns, opt.t_max);
    write_text_file((fs::path(opt.out) / "fit_report.txt").string(), fit_report(fit));
    auto meta = tolerance_warnings(opt);
    meta.push_back("n_list = " + opt.n_list);
    meta.push_back("t_max = " + std::to_string(opt.t_max));
    write_text_file((fs::path(opt.out) / "run.meta").string(), meta_text("search", meta));
    return 0;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"staggered quantum walk toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Options opt;

    auto add_tolerances = [&](CLI::App* cmd) {
        cmd->add_option("--operator-tol", opt.operator_tol, "operator equality tolerance");
        cmd->add_option("--norm-tol", opt.norm_tol, "norm tolerance");
    };

    auto* classify = app.add_subcommand("classify", "taxonomy report with witness");
    classify->add_option("--graph", opt.graph_path, "edge-list file or named:<name>")->required();
    classify->add_option("--out", opt.out, "report file (stdout otherwise)");

    auto* tessellate = app.add_subcommand("tessellate", "construct a covering tessellation pair");
    tessellate->add_option("--graph", opt.graph_path)->required();
    tessellate->add_option("--out", opt.out);

    auto* evolve = app.add_subcommand("evolve", "apply the walk operator");
    evolve->add_option("--graph", opt.graph_path)->required();
    evolve->add_option("--tess", opt.tess_path)->required();
    evolve->add_option("--steps", opt.steps);
    evolve->add_option("--start", opt.start, "basis start vertex (uniform otherwise)");
    evolve->add_option("--blue-amps", opt.blue_amps, "amplitude CSV for the blue polygons");
    evolve->add_option("--red-amps", opt.red_amps);
    evolve->add_option("--dump-dense", opt.dump_dense, "write the dense operator CSV");
    evolve->add_option("--state-out", opt.state_out, "write the final state CSV");
    add_tolerances(evolve);

    auto* convert = app.add_subcommand("convert", "certify the bipartite double-reflection form");
    convert->add_option("--graph", opt.graph_path)->required();
    convert->add_option("--tess", opt.tess_path)->required();
    convert->add_option("--blue-amps", opt.blue_amps);
    convert->add_option("--red-amps", opt.red_amps);
    convert->add_option("--out", opt.out);
    add_tolerances(convert);

    auto* model = app.add_subcommand("model", "emit a reference model graph + tessellation");
    model->add_option("--name", opt.model_name, "honeycomb | three-state | torus-search")
        ->required();
    model->add_option("--m", opt.m, "hexagons per direction (honeycomb)");
    model->add_option("--sites", opt.sites, "ring length (three-state)");
    model->add_option("--rho", opt.rho, "coin parameter (three-state)");
    model->add_option("--n", opt.torus_n, "torus side (torus-search)");
    model->add_option("--out", opt.out, "output directory")->required();

    auto* search = app.add_subcommand("search", "marked-vertex search experiment");
    search->add_option("--n-list", opt.n_list, "comma-separated torus sides");
    search->add_option("--t-max", opt.t_max, "steps per instance (auto if 0)");
    search->add_option("--out", opt.out, "output directory")->required();
    search->add_flag("--raw-amps", opt.dump_raw, "also dump bare marked amplitude sums");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return run_classify(opt);
        if (tessellate->parsed()) return run_tessellate(opt);
        if (evolve->parsed()) return run_evolve(opt);
        if (convert->parsed()) return run_convert(opt);
        if (model->parsed()) return run_model(opt);
        if (search->parsed()) return run_search_cmd(opt);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace sqw
