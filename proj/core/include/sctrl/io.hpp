#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sctrl/synthesis.hpp"

namespace sctrl {

/// Topology sources are either files or builtin names ("ieee14", "fig1",
/// "fig2"). File format: vertex count on line 1, "directed" or "undirected"
/// on line 2, then one "u v" pair per line; '#' starts a comment.
Digraph load_topology(const std::string& source);

/// Subgraph lists for the explicit decomposition mode. A file (or the
/// builtin "ieee14_paper.subgraphs") holds blocks of the form
///   subgraph
///   vertices 1 2 3
///   edges 1-2 2-3
/// where each u-v line expands to the directions present in the topology.
std::vector<SubgraphSpec> load_subgraphs(const std::string& source);

/// Parse errors carry the offending line number.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line);
    int line;
};

/// DOT text with root vertices and critical edges styled; deterministic
/// ordering (vertices, then edges, ascending).
std::string export_dot(const Digraph& g, const RootSet& roots,
                       const std::vector<Edge>& critical_edges = {});

struct PhaseTiming {
    std::string phase;
    double milliseconds = 0.0;
};

struct AnalysisReport {
    std::string source;
    int vertex_count = 0;
    int edge_count = 0;
    SynthesisResult synthesis;
    std::vector<PhaseTiming> timings;  // emitted only when requested
    bool include_timings = false;
};

enum class ReportFormat { json, text };

std::string emit_report(const AnalysisReport& report, ReportFormat format);

/// Canonical serialization of a digraph in the topology file format
/// (directed mode); load_topology of the output reproduces the graph.
std::string emit_topology(const Digraph& g);

}  // namespace sctrl
