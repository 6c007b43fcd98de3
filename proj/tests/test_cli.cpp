#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "sqw/cli.hpp"
#include "sqw/io.hpp"
#include "sqw/named_graphs.hpp"
#include "support.hpp"

using namespace sqw;
namespace fs = std::filesystem;

namespace {

int run_cli(std::vector<std::string> args, std::string* err_out = nullptr) {
    std::vector<const char*> argv{"sqw"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream captured;
    auto* old = std::cerr.rdbuf(captured.rdbuf());
    int rc = cli_main(static_cast<int>(argv.size()), argv.data());
    std::cerr.rdbuf(old);
    if (err_out) *err_out = captured.str();
    return rc;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("sqw_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_SUITE("cli") {

TEST_CASE("classify against a named graph") {
    TempDir dir;
    std::string out = dir.file("report.txt");
    CHECK(run_cli({"classify", "--graph", "named:fig1", "--out", out}) == 0);
    std::string report = read_text_file(out);
    CHECK(report.find("class = Class2a") != std::string::npos);
    CHECK(fs::exists(out + ".meta"));
}

TEST_CASE("tessellate rejects non-2-tessellable graphs with exit 1") {
    std::string err;
    CHECK(run_cli({"tessellate", "--graph", "named:cycle(5)"}, &err) == 1);
    CHECK(err.find("NotTwoTessellable") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({"classify"}) == 2);           // missing --graph
    CHECK(run_cli({"frobnicate"}) == 2);         // unknown subcommand
    CHECK(run_cli({"classify", "--graph", "named:fig1", "--bogus"}) == 2);
}

TEST_CASE("evolve dumps the golden dense operator") {
    TempDir dir;
    std::string tess = dir.file("fig1.tess");
    write_text_file(tess, format_tessellation(test::fig1_pair()));
    std::string dense = dir.file("dense.csv");
    CHECK(run_cli({"evolve", "--graph", "named:fig1", "--tess", tess, "--dump-dense", dense}) ==
          0);
    auto matrix = read_dense_csv_file(dense);
    CHECK(matrix.max_abs_diff(test::golden_five_by_five()) < 1e-12);
}

TEST_CASE("convert reports the barbell certificate and rejects intersections") {
    TempDir dir;
    Graph barbell = named_graph("barbell");
    std::string edges = dir.file("barbell.edges");
    write_text_file(edges, format_edge_list(barbell));

    std::string tess_b = dir.file("barbell_b.tess");
    write_text_file(tess_b, format_tessellation(test::barbell_pair_b()));
    std::string out = dir.file("cert.txt");
    CHECK(run_cli({"convert", "--graph", edges, "--tess", tess_b, "--out", out}) == 0);
    std::string report = read_text_file(out);
    CHECK(report.find("block_ok = true") != std::string::npos);
    CHECK(report.find("idle_dimension = 4") != std::string::npos);

    std::string tess_a = dir.file("barbell_a.tess");
    write_text_file(tess_a, format_tessellation(test::barbell_pair_a()));
    std::string err;
    CHECK(run_cli({"convert", "--graph", edges, "--tess", tess_a}, &err) == 1);
    CHECK(err.find("EdgeInIntersection") != std::string::npos);
}

TEST_CASE("model emission is byte deterministic") {
    TempDir dir;
    std::string out1 = dir.file("run1");
    std::string out2 = dir.file("run2");
    CHECK(run_cli({"model", "--name", "honeycomb", "--m", "2", "--out", out1}) == 0);
    CHECK(run_cli({"model", "--name", "honeycomb", "--m", "2", "--out", out2}) == 0);
    for (const char* name : {"honeycomb.edges", "honeycomb.tess", "honeycomb.meta"}) {
        CHECK(read_text_file((fs::path(out1) / name).string()) ==
              read_text_file((fs::path(out2) / name).string()));
    }
    // The emitted pair loads back into a working walk.
    Graph g = read_edge_list_file((fs::path(out1) / "honeycomb.edges").string());
    auto pair = read_tessellation_file((fs::path(out1) / "honeycomb.tess").string());
    CHECK(union_covers_edges(g, pair));
}

TEST_CASE("model rejects unknown names") {
    TempDir dir;
    std::string err;
    CHECK(run_cli({"model", "--name", "mystery", "--out", dir.file("x")}, &err) == 1);
    CHECK(err.find("UnknownName") != std::string::npos);
}

TEST_CASE("search emits series and a fit report") {
    TempDir dir;
    std::string out = dir.file("exp");
    CHECK(run_cli({"search", "--n-list", "3,4,5,6", "--t-max", "90", "--out", out}) == 0);
    std::string out2 = dir.file("exp2");
    CHECK(run_cli({"search", "--n-list", "3,4,5,6", "--t-max", "90", "--out", out2}) == 0);
    CHECK(read_text_file((fs::path(out) / "fit_report.txt").string()) ==
          read_text_file((fs::path(out2) / "fit_report.txt").string()));
    CHECK(read_text_file((fs::path(out) / "search_n4.csv").string()) ==
          read_text_file((fs::path(out2) / "search_n4.csv").string()));
    for (const char* name : {"search_n3.csv", "search_n6.csv", "fit_report.txt", "run.meta"})
        CHECK(fs::exists(fs::path(out) / name));
    std::string fit = read_text_file((fs::path(out) / "fit_report.txt").string());
    CHECK(fit.find("[fit]") != std::string::npos);
    CHECK(fit.find("points = 4") != std::string::npos);

    std::string series = read_text_file((fs::path(out) / "search_n3.csv").string());
    CHECK(series.rfind("t,p\n", 0) == 0);
}

} // TEST_SUITE
