#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sctrl/controllability.hpp"
#include "sctrl/io.hpp"
#include "sctrl/synthesis.hpp"

using namespace sctrl;

namespace {

std::string data_path(const std::string& name) {
    return std::string(SCTRL_DATA_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("builtin topologies equal their data files") {
    for (const char* name : {"ieee14", "fig2"}) {
        Digraph builtin = load_topology(name);
        Digraph from_file = load_topology(data_path(std::string(name) + ".topology"));
        CHECK(builtin == from_file);
    }
    CHECK(load_topology("ieee14").vertex_count() == 14);
    CHECK(load_topology("ieee14").edge_count() == 40);
}

TEST_CASE("builtin subgraphs equal their data file") {
    auto builtin = load_subgraphs("ieee14_paper.subgraphs");
    auto from_file = load_subgraphs(data_path("ieee14_paper.subgraphs"));
    REQUIRE(builtin.size() == 2);
    REQUIRE(from_file.size() == 2);
    for (size_t i = 0; i < 2; ++i) {
        CHECK(builtin[i].vertices == from_file[i].vertices);
        CHECK(builtin[i].lines == from_file[i].lines);
    }
}

TEST_CASE("topology parse errors carry line numbers") {
    CHECK_THROWS_AS((void)load_topology("no_such_builtin"), std::invalid_argument);

    std::string bad_header = write_temp("bad_header.topology", "x\ndirected\n1 2\n");
    CHECK_THROWS_AS((void)load_topology(bad_header), ParseError);

    std::string bad_mode = write_temp("bad_mode.topology", "3\nsideways\n1 2\n");
    try {
        (void)load_topology(bad_mode);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }

    std::string bad_vertex = write_temp("bad_vertex.topology",
                                        "3\ndirected\n1 2\n# note\n1 9\n");
    try {
        (void)load_topology(bad_vertex);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 5);  // comments keep their line numbers
    }
}

TEST_CASE("subgraph parse errors") {
    std::string stray = write_temp("stray.subgraphs", "vertices 1 2\n");
    CHECK_THROWS_AS((void)load_subgraphs(stray), ParseError);
    std::string token = write_temp("token.subgraphs",
                                   "subgraph\nvertices 1 2\nedges 12\n");
    CHECK_THROWS_AS((void)load_subgraphs(token), ParseError);
}

TEST_CASE("emit_topology round-trips through load_topology") {
    Digraph g = load_topology("ieee14");
    std::string path = write_temp("roundtrip.topology", emit_topology(g));
    CHECK(load_topology(path) == g);
}

TEST_CASE("DOT export styles roots and critical edges deterministically") {
    Digraph g = load_topology("fig2");
    std::string dot = export_dot(g, {1, 5}, {{1, 2}, {3, 4}, {5, 3}});
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("color=red") != std::string::npos);
    // Deterministic: identical calls produce identical bytes.
    CHECK(dot == export_dot(g, {1, 5}, {{1, 2}, {3, 4}, {5, 3}}));
    // Plain vertices and edges are not styled.
    CHECK(dot.find("\n  v2;") != std::string::npos);
    CHECK(dot.find("\n  v3 -> v2;") != std::string::npos);
}

TEST_CASE("JSON report is schema-tagged and byte-stable") {
    Digraph g = load_topology("ieee14");
    AnalysisReport report;
    report.source = "ieee14";
    report.vertex_count = g.vertex_count();
    report.edge_count = g.edge_count();
    report.synthesis =
        synthesize(g, RootSet{8, 10}, load_subgraphs("ieee14_paper.subgraphs"));

    std::string a = emit_report(report, ReportFormat::json);
    std::string b = emit_report(report, ReportFormat::json);
    CHECK(a == b);
    CHECK(a.find("\"schema\": 1") != std::string::npos);
    CHECK(a.find("\"final\"") != std::string::npos);
    CHECK(a.find("\"timings\"") == std::string::npos);  // only on request

    report.include_timings = true;
    report.timings.push_back({"synthesize", 1.25});
    CHECK(emit_report(report, ReportFormat::json).find("\"timings\"") !=
          std::string::npos);

    std::string text = emit_report(report, ReportFormat::text);
    CHECK(text.find("final roots") != std::string::npos);
}

#ifdef SCTRL_CLI_PATH
namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(SCTRL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("CLI exit codes: 0 pass, 1 negative, 2 usage") {
    CHECK(run_cli("check ieee14 --roots 8,10") == 0);
    CHECK(run_cli("check fig2 --roots 1") == 1);
    CHECK(run_cli("check ieee14") == 2);             // --roots required
    CHECK(run_cli("check no_such_file --roots 1") == 2);
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("verify ieee14 --roots 1,8,10,14") == 0);
    CHECK(run_cli("inputs fig2") == 0);
}

TEST_CASE("CLI export writes a DOT file") {
    CHECK(run_cli("export fig2 --roots 1,5 --dot /tmp/fig2.dot") == 0);
    std::ifstream in("/tmp/fig2.dot");
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("digraph") != std::string::npos);
    CHECK(buf.str().find("color=red") != std::string::npos);
}
#endif
