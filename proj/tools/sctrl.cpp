// Command-line front end for the structural-controllability resilience
// toolkit: controllability checks, critical-edge scans, actuator synthesis,
// exhaustive single-edge verification, and DOT export.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sctrl/controllability.hpp"
#include "sctrl/io.hpp"
#include "sctrl/resilience.hpp"
#include "sctrl/synthesis.hpp"

namespace {

using namespace sctrl;

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

RootSet parse_roots(const std::string& spec) {
    RootSet roots;
    std::stringstream in(spec);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        roots.insert(std::stoi(token));
    }
    return roots;
}

struct CommonOptions {
    std::string topology;
    std::string roots_spec;
    std::string format = "text";
    int seed = 0;   // reserved for randomized harnesses; recorded only
    int max_k = 3;
};

bool json_format(const CommonOptions& opt) { return opt.format == "json"; }

int run_check(const CommonOptions& opt) {
    Digraph g = load_topology(opt.topology);
    RootSet roots = parse_roots(opt.roots_spec);
    ControllabilityVerdict verdict = is_structurally_controllable(g, roots);
    if (json_format(opt)) {
        nlohmann::json j;
        j["controllable"] = verdict.controllable;
        j["inaccessible"] = std::vector<Vertex>(verdict.inaccessible.begin(),
                                                verdict.inaccessible.end());
        if (verdict.dilation_witness) {
            j["dilation_witness"] = std::vector<Vertex>(
                verdict.dilation_witness->begin(), verdict.dilation_witness->end());
        } else {
            j["dilation_witness"] = nullptr;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (verdict.controllable ? "structurally controllable"
                                           : "NOT structurally controllable")
                  << " w.r.t. " << to_string(roots) << "\n";
        if (!verdict.inaccessible.empty()) {
            std::cout << "inaccessible: " << to_string(verdict.inaccessible) << "\n";
        }
        if (verdict.dilation_witness) {
            std::cout << "dilation set: " << to_string(*verdict.dilation_witness) << "\n";
        }
    }
    return verdict.controllable ? kExitPass : kExitNegative;
}

int run_critical(const CommonOptions& opt) {
    Digraph g = load_topology(opt.topology);
    RootSet roots = parse_roots(opt.roots_spec);
    if (!is_structurally_controllable(g, roots).controllable) {
        std::cerr << "error: input is not structurally controllable w.r.t. "
                  << to_string(roots) << "\n";
        return kExitNegative;
    }
    auto reports = critical_edge_scan(g, roots);
    EdgeControllabilityIndex index = edge_controllability_index(g, roots, opt.max_k);
    if (json_format(opt)) {
        nlohmann::json j;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& rep : reports) {
            nlohmann::json c;
            c["edge"] = {rep.edge.from, rep.edge.to};
            c["x"] = rep.witness_x ? nlohmann::json(std::vector<Vertex>(
                                         rep.witness_x->begin(), rep.witness_x->end()))
                                   : nlohmann::json();
            c["s"] = rep.witness_s ? nlohmann::json(std::vector<Vertex>(
                                         rep.witness_s->begin(), rep.witness_s->end()))
                                   : nlohmann::json();
            arr.push_back(c);
        }
        j["critical_edges"] = arr;
        j["edge_controllability_index"] = index.to_string();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << reports.size() << " critical edge(s) w.r.t. " << to_string(roots)
                  << "\n";
        for (const auto& rep : reports) {
            std::cout << "  " << to_string(rep.edge);
            if (rep.witness_x) std::cout << "  X = " << to_string(*rep.witness_x);
            if (rep.witness_s) std::cout << "  S = " << to_string(*rep.witness_s);
            std::cout << "\n";
        }
        std::cout << "edge-controllability index: " << index.to_string() << "\n";
    }
    return kExitPass;
}

int run_synthesize(const CommonOptions& opt, const std::string& subgraphs,
                   bool paranoid, bool timings) {
    using clock = std::chrono::steady_clock;
    AnalysisReport report;
    report.source = opt.topology;
    Digraph g = load_topology(opt.topology);
    report.vertex_count = g.vertex_count();
    report.edge_count = g.edge_count();

    std::optional<RootSet> roots;
    if (!opt.roots_spec.empty()) roots = parse_roots(opt.roots_spec);
    std::optional<std::vector<SubgraphSpec>> decomposition;
    if (!subgraphs.empty()) decomposition = load_subgraphs(subgraphs);

    auto start = clock::now();
    report.synthesis = synthesize(g, roots, decomposition, paranoid);
    auto elapsed = std::chrono::duration<double, std::milli>(clock::now() - start);
    report.include_timings = timings;
    report.timings.push_back({"synthesize", elapsed.count()});

    std::cout << emit_report(report,
                             json_format(opt) ? ReportFormat::json : ReportFormat::text);
    return report.synthesis.verification.pass ? kExitPass : kExitNegative;
}

int run_verify(const CommonOptions& opt, bool include_root_edges) {
    Digraph g = load_topology(opt.topology);
    RootSet roots = parse_roots(opt.roots_spec);
    ResilienceVerdict verdict =
        verify_single_edge_resilience(g, roots, include_root_edges);
    if (json_format(opt)) {
        nlohmann::json j;
        j["pass"] = verdict.pass;
        j["base_controllable"] = verdict.base_controllable;
        nlohmann::json arr = nlohmann::json::array();
        for (const Edge& e : verdict.violations) arr.push_back({e.from, e.to});
        j["violations"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (verdict.pass ? "resilient to any single "
                                   : "NOT resilient to single ")
                  << (include_root_edges ? "edge" : "non-root edge")
                  << " failure w.r.t. " << to_string(roots) << "\n";
        for (const Edge& e : verdict.violations) {
            std::cout << "  violating edge " << to_string(e) << "\n";
        }
    }
    return verdict.pass ? kExitPass : kExitNegative;
}

int run_inputs(const CommonOptions& opt) {
    Digraph g = load_topology(opt.topology);
    InputConfiguration config = dedicated_input_configuration(g);
    if (json_format(opt)) {
        nlohmann::json j;
        j["roots"] = std::vector<Vertex>(config.roots.begin(), config.roots.end());
        j["from_unmatched"] = std::vector<Vertex>(config.from_unmatched.begin(),
                                                  config.from_unmatched.end());
        j["from_source_sccs"] = std::vector<Vertex>(config.from_source_sccs.begin(),
                                                    config.from_source_sccs.end());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dedicated input configuration: " << to_string(config.roots) << "\n"
                  << "  unmatched vertices: " << to_string(config.from_unmatched) << "\n"
                  << "  source-SCC representatives: "
                  << to_string(config.from_source_sccs) << "\n";
    }
    return kExitPass;
}

int run_export(const CommonOptions& opt, const std::string& dot_path,
               const std::string& report_path) {
    Digraph g = load_topology(opt.topology);
    RootSet roots;
    std::vector<Edge> criticals;
    if (!report_path.empty()) {
        std::ifstream in(report_path);
        if (!in) throw std::invalid_argument("cannot open report " + report_path);
        nlohmann::json j = nlohmann::json::parse(in);
        for (Vertex v : j.at("roots").at("final").get<std::vector<Vertex>>()) {
            roots.insert(v);
        }
        for (const auto& c : j.at("critical_edges")) {
            criticals.push_back({c.at("edge")[0].get<Vertex>(),
                                 c.at("edge")[1].get<Vertex>()});
        }
    } else if (!opt.roots_spec.empty()) {
        roots = parse_roots(opt.roots_spec);
        if (is_structurally_controllable(g, roots).controllable) {
            for (const auto& rep : critical_edge_scan(g, roots)) {
                criticals.push_back(rep.edge);
            }
        }
    }
    std::sort(criticals.begin(), criticals.end());
    std::string dot = export_dot(g, roots, criticals);
    std::ofstream out(dot_path);
    if (!out) throw std::invalid_argument("cannot write " + dot_path);
    out << dot;
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural controllability resilience toolkit"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string subgraphs, dot_path, report_path;
    bool paranoid = false, include_root_edges = false, timings = false;

    auto add_common = [&](CLI::App* cmd, bool needs_roots) {
        cmd->add_option("topology", opt.topology, "topology file or builtin name")
            ->required();
        auto* r = cmd->add_option("--roots", opt.roots_spec,
                                  "comma-separated root vertices, e.g. 8,10");
        if (needs_roots) r->required();
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--seed", opt.seed, "seed for randomized harnesses");
        cmd->add_option("--max-k", opt.max_k, "edge-controllability index bound");
    };

    auto* check = app.add_subcommand("check", "structural controllability test");
    add_common(check, true);
    auto* critical = app.add_subcommand("critical", "critical-edge scan");
    add_common(critical, true);
    auto* synth = app.add_subcommand("synthesize", "two-step actuator synthesis");
    add_common(synth, false);
    synth->add_option("--subgraphs", subgraphs, "explicit decomposition file");
    synth->add_flag("--paranoid", paranoid, "re-verify every theorem-backed step");
    synth->add_flag("--timings", timings, "include phase timings in the report");
    auto* verify = app.add_subcommand("verify", "exhaustive single-edge oracle");
    add_common(verify, true);
    verify->add_flag("--include-root-edges", include_root_edges,
                     "also delete root edges");
    auto* inputs = app.add_subcommand("inputs", "minimal dedicated input configuration");
    add_common(inputs, false);
    auto* exp = app.add_subcommand("export", "DOT export");
    add_common(exp, false);
    exp->add_option("--dot", dot_path, "output DOT path")->required();
    exp->add_option("--report", report_path, "analysis report JSON to style from");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(opt);
        if (critical->parsed()) return run_critical(opt);
        if (synth->parsed()) return run_synthesize(opt, subgraphs, paranoid, timings);
        if (verify->parsed()) return run_verify(opt, include_root_edges);
        if (inputs->parsed()) return run_inputs(opt);
        if (exp->parsed()) return run_export(opt, dot_path, report_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegative;
    }
    return kExitUsage;
}
