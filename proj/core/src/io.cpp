#include "sctrl/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace sctrl {

namespace {

using nlohmann::json;

const std::map<std::string, std::string>& builtin_topologies() {
    // ieee14: the 14-bus network, 20 undirected lines.
    // fig1: 3-cycle; fig2: the five-vertex critical-edge example.
    static const std::map<std::string, std::string> table = {
        {"ieee14",
         "14\nundirected\n"
         "1 2\n2 3\n1 5\n2 5\n2 4\n3 4\n4 7\n7 8\n4 9\n5 6\n"
         "6 11\n6 12\n12 13\n7 9\n9 10\n9 14\n10 11\n13 14\n6 13\n4 5\n"},
        {"fig1", "3\ndirected\n1 2\n2 3\n3 1\n"},
        {"fig2", "5\ndirected\n1 2\n3 2\n3 4\n3 5\n4 3\n5 3\n"},
    };
    return table;
}

const std::map<std::string, std::string>& builtin_subgraphs() {
    static const std::map<std::string, std::string> table = {
        {"ieee14_paper.subgraphs",
         "subgraph\nvertices 1 2 3 4 7 8\nedges 1-2 2-3 3-4 4-7 7-8\n"
         "subgraph\nvertices 6 10 11 12 13 14\nedges 10-11 6-11 6-12 12-13 13-14\n"},
    };
    return table;
}

std::string read_source(const std::string& source,
                        const std::map<std::string, std::string>& builtins) {
    if (std::filesystem::exists(source)) {
        std::ifstream in(source);
        if (!in) throw std::runtime_error("cannot open " + source);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    auto it = builtins.find(source);
    if (it == builtins.end()) {
        throw std::invalid_argument("unknown topology or file: " + source);
    }
    return it->second;
}

// Lines with comments stripped, paired with 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> lines;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream probe(line);
        std::string word;
        if (probe >> word) lines.emplace_back(number, line);
    }
    return lines;
}

json to_json(const VertexSet& s) { return json(std::vector<Vertex>(s.begin(), s.end())); }

json to_json(const Edge& e) { return json::array({e.from, e.to}); }

json to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back(to_json(e));
    return out;
}

}  // namespace

ParseError::ParseError(const std::string& what, int line_number)
    : std::runtime_error(what + " (line " + std::to_string(line_number) + ")"),
      line(line_number) {}

Digraph load_topology(const std::string& source) {
    const std::string text = read_source(source, builtin_topologies());
    const auto lines = content_lines(text);
    if (lines.size() < 2) throw ParseError("missing header", 1);

    int vertex_count = 0;
    {
        std::istringstream in(lines[0].second);
        if (!(in >> vertex_count) || vertex_count <= 0) {
            throw ParseError("expected a positive vertex count", lines[0].first);
        }
    }
    bool undirected = false;
    {
        std::istringstream in(lines[1].second);
        std::string mode;
        in >> mode;
        if (mode == "undirected") {
            undirected = true;
        } else if (mode != "directed") {
            throw ParseError("expected 'directed' or 'undirected'", lines[1].first);
        }
    }
    EdgeList pairs;
    for (size_t i = 2; i < lines.size(); ++i) {
        std::istringstream in(lines[i].second);
        Edge e;
        if (!(in >> e.from >> e.to)) {
            throw ParseError("expected an edge 'u v'", lines[i].first);
        }
        if (e.from < 1 || e.from > vertex_count || e.to < 1 || e.to > vertex_count) {
            throw ParseError("edge endpoint out of range", lines[i].first);
        }
        pairs.push_back(e);
    }
    return Digraph::build(vertex_count, pairs, undirected);
}

std::vector<SubgraphSpec> load_subgraphs(const std::string& source) {
    const std::string text = read_source(source, builtin_subgraphs());
    std::vector<SubgraphSpec> specs;
    for (const auto& [number, line] : content_lines(text)) {
        std::istringstream in(line);
        std::string keyword;
        in >> keyword;
        if (keyword == "subgraph") {
            specs.emplace_back();
        } else if (keyword == "vertices") {
            if (specs.empty()) throw ParseError("'vertices' before 'subgraph'", number);
            Vertex v;
            while (in >> v) specs.back().vertices.insert(v);
        } else if (keyword == "edges") {
            if (specs.empty()) throw ParseError("'edges' before 'subgraph'", number);
            std::string token;
            while (in >> token) {
                auto dash = token.find('-');
                if (dash == std::string::npos) {
                    throw ParseError("expected 'u-v' edge token", number);
                }
                try {
                    Vertex u = std::stoi(token.substr(0, dash));
                    Vertex v = std::stoi(token.substr(dash + 1));
                    specs.back().lines.emplace_back(u, v);
                } catch (const std::exception&) {
                    throw ParseError("malformed edge token '" + token + "'", number);
                }
            }
        } else {
            throw ParseError("unknown keyword '" + keyword + "'", number);
        }
    }
    if (specs.empty()) throw ParseError("no subgraph blocks", 1);
    return specs;
}

std::string export_dot(const Digraph& g, const RootSet& roots,
                       const std::vector<Edge>& critical_edges) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (Vertex v : g.vertices()) {
        out << "  v" << v;
        if (roots.count(v)) out << " [shape=doublecircle, style=filled, fillcolor=gold]";
        out << ";\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  v" << e.from << " -> v" << e.to;
        if (std::binary_search(critical_edges.begin(), critical_edges.end(), e)) {
            out << " [color=red, penwidth=2.0]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string emit_topology(const Digraph& g) {
    std::ostringstream out;
    // Arbitrary-identifier graphs are exported over 1..max identifier.
    Vertex max_id = 0;
    for (Vertex v : g.vertices()) max_id = std::max(max_id, v);
    out << max_id << "\ndirected\n";
    for (const Edge& e : g.edges()) out << e.from << ' ' << e.to << '\n';
    return out.str();
}

std::string emit_report(const AnalysisReport& report, ReportFormat format) {
    const SynthesisResult& syn = report.synthesis;
    if (format == ReportFormat::json) {
        json j;
        j["schema"] = 1;
        j["input"] = {{"source", report.source},
                      {"vertex_count", report.vertex_count},
                      {"edge_count", report.edge_count}};
        j["roots"] = {{"initial", to_json(syn.initial_roots)},
                      {"additional", to_json(syn.additional_roots)},
                      {"final", to_json(syn.final_roots)}};
        json criticals = json::array();
        for (const CriticalEdgeReport& rep : syn.critical_edges) {
            json c;
            c["edge"] = to_json(rep.edge);
            c["kind"] = rep.witness_kind == WitnessKind::source_scc ? "source_scc"
                                                                    : "dilation_set";
            c["x"] = rep.witness_x ? to_json(*rep.witness_x) : json();
            c["s"] = rep.witness_s ? to_json(*rep.witness_s) : json();
            criticals.push_back(c);
        }
        j["critical_edges"] = criticals;
        json picks = json::array();
        for (const CoverPick& pick : syn.cover.picks) {
            picks.push_back({{"vertex", pick.vertex}, {"covered", pick.covered}});
        }
        j["cover"] = {{"universe", syn.cover.universe_size}, {"picks", picks}};
        json augmentation = json::array();
        for (const AugmentStep& step : syn.augmentation_log) {
            augmentation.push_back({{"vertex", step.vertex},
                                    {"action", step.promoted_root ? "promoted_root"
                                                                  : "augmented"},
                                    {"incoming", to_json(step.incoming)},
                                    {"outgoing", to_json(step.outgoing)}});
        }
        j["augmentation"] = augmentation;
        j["verification"] = {{"pass", syn.verification.pass},
                             {"violations", to_json(syn.verification.violations)}};
        j["fallback"] = syn.whole_graph_fallback;
        if (report.include_timings) {
            json timings = json::array();
            for (const PhaseTiming& t : report.timings) {
                timings.push_back({{"phase", t.phase}, {"ms", t.milliseconds}});
            }
            j["timings"] = timings;
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "input: " << report.source << " (" << report.vertex_count << " vertices, "
        << report.edge_count << " edges)\n";
    out << "initial roots: " << to_string(syn.initial_roots) << "\n";
    if (!syn.critical_edges.empty()) {
        out << "critical edges:\n";
        for (const CriticalEdgeReport& rep : syn.critical_edges) {
            out << "  " << to_string(rep.edge);
            if (rep.witness_x) out << "  X = " << to_string(*rep.witness_x);
            if (rep.witness_s) out << "  S = " << to_string(*rep.witness_s);
            out << "\n";
        }
    }
    if (!syn.cover.picks.empty()) {
        out << "cover picks:";
        for (const CoverPick& pick : syn.cover.picks) {
            out << " v" << pick.vertex << " (+" << pick.covered.size() << ")";
        }
        out << "\n";
    }
    for (const AugmentStep& step : syn.augmentation_log) {
        out << (step.promoted_root ? "promoted root" : "augmented") << " v"
            << step.vertex << " (" << step.incoming.size() << " in, "
            << step.outgoing.size() << " out)\n";
    }
    if (!syn.additional_roots.empty() || !syn.final_roots.empty()) {
        out << "additional roots: " << to_string(syn.additional_roots) << "\n";
        out << "final roots: " << to_string(syn.final_roots) << "\n";
    }
    out << "verification: " << (syn.verification.pass ? "pass" : "FAIL");
    if (!syn.verification.violations.empty()) {
        out << " (violations:";
        for (const Edge& e : syn.verification.violations) out << ' ' << to_string(e);
        out << ")";
    }
    out << "\n";
    if (syn.whole_graph_fallback) out << "note: whole-graph fallback was used\n";
    if (report.include_timings) {
        for (const PhaseTiming& t : report.timings) {
            out << "phase " << t.phase << ": " << t.milliseconds << " ms\n";
        }
    }
    return out.str();
}

}  // namespace sctrl
