#include "sctrl/synthesis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sctrl {

namespace {

RootSet restrict_roots(const RootSet& r, const Digraph& g) {
    RootSet out;
    for (Vertex v : r) {
        if (g.has_vertex(v)) out.insert(v);
    }
    return out;
}

RootSet restrict_roots(const RootSet& r, const VertexSet& verts) {
    RootSet out;
    for (Vertex v : r) {
        if (verts.count(v)) out.insert(v);
    }
    return out;
}

void require_resilient(const Digraph& g, const RootSet& r, const char* op) {
    if (!verify_single_edge_resilience(g, r).pass) {
        throw std::logic_error(std::string(op) +
                               ": input is not 2-edge controllable w.r.t. the roots");
    }
}

Subgraph make_subgraph(const Digraph& g, const RootSet& r, const SubgraphSpec& spec) {
    for (Vertex v : spec.vertices) {
        if (!g.has_vertex(v)) {
            throw std::invalid_argument("subgraph vertex " + std::to_string(v) +
                                        " not in graph");
        }
    }
    EdgeList edges;
    for (const auto& [u, v] : spec.lines) {
        if (!spec.vertices.count(u) || !spec.vertices.count(v)) {
            throw std::invalid_argument("subgraph line endpoints outside the vertex list");
        }
        bool any = false;
        if (g.has_edge(u, v)) {
            edges.push_back({u, v});
            any = true;
        }
        if (g.has_edge(v, u)) {
            edges.push_back({v, u});
            any = true;
        }
        if (!any) {
            throw std::invalid_argument("subgraph line (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ") has no edge in the graph");
        }
    }
    Subgraph sub;
    sub.graph = Digraph(std::vector<Vertex>(spec.vertices.begin(), spec.vertices.end()),
                        std::move(edges));
    sub.roots = restrict_roots(r, sub.graph);
    sub.max_out_degree_ok = sub.graph.max_out_degree() <= 2;
    return sub;
}

// Edges of g between z and the vertices of `current`, split by direction.
std::pair<EdgeList, EdgeList> incident_edges(const Digraph& g, const Digraph& current,
                                             Vertex z) {
    EdgeList incoming, outgoing;
    for (Vertex u : g.in_neighbors(z)) {
        if (current.has_vertex(u)) incoming.push_back({u, z});
    }
    for (Vertex v : g.out_neighbors(z)) {
        if (current.has_vertex(v)) outgoing.push_back({z, v});
    }
    return {incoming, outgoing};
}

WitnessFamily family_from_reports(const std::vector<CriticalEdgeReport>& reports,
                                  bool include_s) {
    std::map<VertexSet, WitnessFamily::Entry> dedup;
    auto add = [&](const VertexSet& members, const Edge& e, bool x_kind) {
        auto [it, fresh] = dedup.try_emplace(members);
        if (fresh) {
            it->second.members = members;
            it->second.x_kind = x_kind;
        }
        it->second.from_edges.push_back(e);
    };
    for (const CriticalEdgeReport& rep : reports) {
        if (rep.witness_x) add(*rep.witness_x, rep.edge, true);
        if (include_s && rep.witness_s) add(*rep.witness_s, rep.edge, false);
    }
    WitnessFamily family;
    for (auto& [members, entry] : dedup) family.sets.push_back(std::move(entry));
    return family;
}

struct StructuredFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SynthesisResult run_structured(const Digraph& g, const RootSet& r,
                               const Decomposition& decomp, bool paranoid) {
    SynthesisResult result;
    result.initial_roots = r;

    WitnessFamily family = collect_witnesses(decomp, r);
    for (const Subgraph& sub : decomp.subgraphs) {
        auto reports = critical_edge_scan(sub.graph, sub.roots);
        result.critical_edges.insert(result.critical_edges.end(), reports.begin(),
                                     reports.end());
    }
    std::sort(result.critical_edges.begin(), result.critical_edges.end(),
              [](const auto& a, const auto& b) { return a.edge < b.edge; });

    result.cover = cover_additional_roots(family, r);
    RootSet final_roots = r;
    final_roots.insert(result.cover.chosen.begin(), result.cover.chosen.end());

    // Union of the decomposition subgraphs.
    std::vector<Vertex> verts(decomp.covered.begin(), decomp.covered.end());
    EdgeList union_edges;
    for (const Subgraph& sub : decomp.subgraphs) {
        union_edges.insert(union_edges.end(), sub.graph.edges().begin(),
                           sub.graph.edges().end());
    }
    Digraph current(std::move(verts), std::move(union_edges));
    if (!verify_single_edge_resilience(current, restrict_roots(final_roots, current))
             .pass) {
        throw StructuredFailure("cover does not make the decomposition resilient");
    }

    VertexSet missing;
    for (Vertex v : g.vertices()) {
        if (!current.has_vertex(v)) missing.insert(v);
    }
    while (!missing.empty()) {
        bool progressed = false;
        for (Vertex z : missing) {
            auto [incoming, outgoing] = incident_edges(g, current, z);
            AugmentResult res =
                augment_vertex(current, restrict_roots(final_roots, current), z,
                               incoming, outgoing, paranoid);
            if (res.accepted) {
                result.augmentation_log.push_back({z, false, incoming, outgoing});
                current = std::move(*res.grown);
                missing.erase(z);
                progressed = true;
                break;
            }
        }
        if (!progressed) {
            const Vertex z = *missing.begin();
            auto [incoming, outgoing] = incident_edges(g, current, z);
            EdgeList incident = incoming;
            incident.insert(incident.end(), outgoing.begin(), outgoing.end());
            current = current.with_vertex(z, incident);
            final_roots.insert(z);
            result.augmentation_log.push_back({z, true, incoming, outgoing});
            missing.erase(z);
        }
    }

    EdgeList remaining;
    for (const Edge& e : g.edges()) {
        if (!current.has_edge(e.from, e.to)) remaining.push_back(e);
    }
    if (!remaining.empty()) {
        current = add_edges(current, restrict_roots(final_roots, current), remaining,
                            paranoid);
    }

    result.verification = verify_single_edge_resilience(g, final_roots);
    if (!result.verification.pass) {
        throw StructuredFailure("final verification failed on the full graph");
    }
    result.final_roots = final_roots;
    for (Vertex v : final_roots) {
        if (!r.count(v)) result.additional_roots.insert(v);
    }
    return result;
}

SynthesisResult run_whole_graph(const Digraph& g, const RootSet& r) {
    SynthesisResult result;
    result.initial_roots = r;
    result.whole_graph_fallback = true;
    RootSet roots = r;

    const int max_rounds = g.vertex_count() + 1;
    for (int round = 0; round < max_rounds; ++round) {
        ResilienceVerdict verdict = verify_single_edge_resilience(g, roots);
        if (verdict.pass) break;
        std::vector<CriticalEdgeReport> reports;
        for (const Edge& e : verdict.violations) {
            reports.push_back(failure_witness(g, roots, e));
        }
        if (round == 0) result.critical_edges = reports;
        CoverInstance cover = cover_additional_roots(family_from_reports(reports, true),
                                                     roots);
        if (round == 0) result.cover = cover;
        if (cover.chosen.empty()) {
            throw std::logic_error("synthesize: uncoverable witness family");
        }
        roots.insert(cover.chosen.begin(), cover.chosen.end());
    }

    result.verification = verify_single_edge_resilience(g, roots);
    if (!result.verification.pass) {
        throw std::logic_error("synthesize: whole-graph fallback did not converge");
    }
    result.final_roots = roots;
    for (Vertex v : roots) {
        if (!r.count(v)) result.additional_roots.insert(v);
    }
    return result;
}

}  // namespace

Decomposition decompose(const Digraph& g, const RootSet& r,
                        const std::vector<SubgraphSpec>& specs) {
    if (!is_structurally_controllable(g, r).controllable) {
        throw std::logic_error("decompose: (g, r) is not structurally controllable");
    }
    Decomposition d;
    for (const SubgraphSpec& spec : specs) {
        Subgraph sub = make_subgraph(g, r, spec);
        for (Vertex v : spec.vertices) {
            if (d.covered.count(v)) {
                throw std::invalid_argument("subgraphs are not vertex-disjoint at v" +
                                            std::to_string(v));
            }
            d.covered.insert(v);
        }
        if (!is_structurally_controllable(sub.graph, sub.roots).controllable) {
            throw std::invalid_argument("subgraph not controllable w.r.t. its roots");
        }
        if (!sub.max_out_degree_ok) {
            throw std::invalid_argument("subgraph max out-degree exceeds 2");
        }
        d.subgraphs.push_back(std::move(sub));
    }
    return d;
}

Decomposition decompose_auto(const Digraph& g, const RootSet& r) {
    if (!is_structurally_controllable(g, r).controllable) {
        throw std::logic_error("decompose: (g, r) is not structurally controllable");
    }
    const Matching m = maximum_matching(bipartite_of(g));

    Decomposition d;
    // Matching-successor chains, one per root.
    for (Vertex root : r) {
        if (d.covered.count(root)) continue;
        std::vector<Vertex> chain{root};
        d.covered.insert(root);
        Vertex v = root;
        while (true) {
            int next = m.left_match[g.index_of(v)];
            if (next < 0) break;
            Vertex w = g.vertices()[next];
            if (d.covered.count(w)) break;
            chain.push_back(w);
            d.covered.insert(w);
            v = w;
        }
        EdgeList edges;
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            edges.push_back({chain[i], chain[i + 1]});
        }
        Subgraph sub;
        sub.graph = Digraph(chain, std::move(edges));
        sub.roots = {root};
        sub.max_out_degree_ok = true;
        d.subgraphs.push_back(std::move(sub));
    }

    // Single-in-edge attachments while the subgraph contracts survive.
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (Vertex v : g.vertices()) {
            if (d.covered.count(v)) continue;
            for (Subgraph& sub : d.subgraphs) {
                Vertex parent = 0;
                for (Vertex u : g.in_neighbors(v)) {
                    if (sub.graph.has_vertex(u)) {
                        parent = u;
                        break;
                    }
                }
                if (parent == 0) continue;
                Digraph candidate = sub.graph.with_vertex(v, {{parent, v}});
                if (candidate.max_out_degree() > 2) continue;
                if (!is_structurally_controllable(candidate, sub.roots).controllable) {
                    continue;
                }
                sub.graph = std::move(candidate);
                d.covered.insert(v);
                progressed = true;
                break;
            }
            if (progressed) break;
        }
    }
    if (d.subgraphs.empty()) {
        throw std::invalid_argument("auto decomposition produced no subgraph");
    }
    return d;
}

WitnessFamily collect_witnesses(const Decomposition& d, const RootSet& r) {
    std::vector<CriticalEdgeReport> reports;
    std::vector<char> certified;
    for (const Subgraph& sub : d.subgraphs) {
        auto part = critical_edge_scan(sub.graph, sub.roots);
        for (auto& rep : part) {
            certified.push_back(sub.max_out_degree_ok);
            reports.push_back(std::move(rep));
        }
    }
    // X_e sets always; S_e sets only from uncertified subgraphs.
    std::map<VertexSet, WitnessFamily::Entry> dedup;
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& rep = reports[i];
        auto add = [&](const VertexSet& members, bool x_kind) {
            auto [it, fresh] = dedup.try_emplace(members);
            if (fresh) {
                it->second.members = members;
                it->second.x_kind = x_kind;
            }
            it->second.from_edges.push_back(rep.edge);
        };
        if (rep.witness_x) add(*rep.witness_x, true);
        if (!certified[i] && rep.witness_s) add(*rep.witness_s, false);
    }
    WitnessFamily family;
    for (auto& [members, entry] : dedup) family.sets.push_back(std::move(entry));
    return family;
}

CoverInstance cover_additional_roots(const WitnessFamily& w, const RootSet& r) {
    CoverInstance cover;
    cover.universe_size = static_cast<int>(w.sets.size());

    std::map<Vertex, std::vector<int>> families;  // F_j over non-root vertices
    for (int i = 0; i < cover.universe_size; ++i) {
        const auto& entry = w.sets[i];
        for (Vertex v : entry.members) {
            if (r.count(v)) {
                throw std::logic_error("witness set " + to_string(entry.members) +
                                       " intersects the root set");
            }
            families[v].push_back(i);
        }
    }

    std::vector<char> covered(w.sets.size(), 0);
    int remaining = cover.universe_size;
    while (remaining > 0) {
        Vertex best = 0;
        int best_gain = 0;
        for (const auto& [v, indices] : families) {  // ascending vertex order
            int gain = 0;
            for (int i : indices) {
                if (!covered[i]) ++gain;
            }
            if (gain > best_gain) {
                best = v;
                best_gain = gain;
            }
        }
        if (best_gain == 0) {
            throw std::logic_error("cover_additional_roots: empty witness set");
        }
        CoverPick pick;
        pick.vertex = best;
        for (int i : families[best]) {
            if (!covered[i]) {
                covered[i] = 1;
                pick.covered.push_back(i);
                --remaining;
            }
        }
        cover.chosen.insert(best);
        cover.picks.push_back(std::move(pick));
    }
    return cover;
}

AugmentResult augment_vertex(const Digraph& current, const RootSet& roots, Vertex z,
                             const EdgeList& incoming, const EdgeList& outgoing,
                             bool paranoid) {
    if (current.has_vertex(z)) {
        throw std::invalid_argument("vertex " + std::to_string(z) + " already present");
    }
    VertexSet in_nbrs;
    for (const Edge& e : incoming) {
        if (e.to != z) throw std::invalid_argument("incoming edge must terminate at z");
        current.index_of(e.from);  // validates
        in_nbrs.insert(e.from);
    }
    for (const Edge& e : outgoing) {
        if (e.from != z) throw std::invalid_argument("outgoing edge must start at z");
        current.index_of(e.to);
    }
    require_resilient(current, roots, "augment_vertex");

    AugmentResult result;
    if (in_nbrs.size() < 2) {
        result.violated_condition = "a";
        return result;
    }
    const CriticalSetScan scan =
        critical_sets(current, &roots,
                      std::min(12, std::max(1, current.vertex_count())));
    for (const CriticalSet& s : scan.sets) {
        VertexSet overlap, outside;
        for (Vertex u : in_nbrs) {
            (s.in_neighborhood.count(u) ? overlap : outside).insert(u);
        }
        if (!overlap.empty() && outside.size() < 2) {
            result.violated_condition = "b";
            result.offending_set = s.members;
            return result;
        }
    }

    EdgeList incident = incoming;
    incident.insert(incident.end(), outgoing.begin(), outgoing.end());
    Digraph grown = current.with_vertex(z, incident);
    // The two guard conditions are not sufficient on their own: a set one
    // edge short of |S| = |N^-(S)| can still collapse once z's in-neighbours
    // all land inside its neighbourhood. Acceptance therefore always
    // confirms the grown graph with the exhaustive single-edge check.
    ResilienceVerdict grown_check = verify_single_edge_resilience(grown, roots);
    if (!grown_check.pass) {
        result.violated_condition = "resilience";
        if (!grown_check.violations.empty()) {
            const Edge& broken = grown_check.violations.front();
            auto verdict = is_structurally_controllable(grown.without_edge(broken),
                                                        roots);
            if (verdict.dilation_witness) {
                result.offending_set = *verdict.dilation_witness;
            }
        }
        return result;
    }
    (void)paranoid;  // acceptance already re-verifies exhaustively
    result.accepted = true;
    result.grown = std::move(grown);
    return result;
}

Digraph add_edges(const Digraph& current, const RootSet& roots, const EdgeList& extra,
                  bool paranoid) {
    for (const Edge& e : extra) {
        current.index_of(e.from);
        current.index_of(e.to);
    }
    require_resilient(current, roots, "add_edges");
    Digraph grown = current.with_edges(extra);
    if (paranoid && !verify_single_edge_resilience(grown, roots).pass) {
        throw std::logic_error(
            "add_edges: paranoid re-verification failed after edge addition");
    }
    return grown;
}

SynthesisResult synthesize(const Digraph& g, std::optional<RootSet> r,
                           std::optional<std::vector<SubgraphSpec>> decomposition,
                           bool paranoid) {
    RootSet roots = r ? *r : dedicated_input_configuration(g).roots;
    if (!is_structurally_controllable(g, roots).controllable) {
        throw std::invalid_argument("synthesize: (g, r) is not structurally controllable");
    }

    if (decomposition) {
        // Explicit decompositions always run the two-step procedure; invalid
        // input surfaces as an error rather than a fallback.
        Decomposition d = decompose(g, roots, *decomposition);
        try {
            return run_structured(g, roots, d, paranoid);
        } catch (const StructuredFailure&) {
            return run_whole_graph(g, roots);
        }
    }

    ResilienceVerdict already = verify_single_edge_resilience(g, roots);
    if (already.pass) {
        SynthesisResult result;
        result.initial_roots = result.final_roots = roots;
        result.verification = already;
        return result;
    }
    try {
        Decomposition d = decompose_auto(g, roots);
        return run_structured(g, roots, d, paranoid);
    } catch (const StructuredFailure&) {
    } catch (const std::invalid_argument&) {
    }
    return run_whole_graph(g, roots);
}

}  // namespace sctrl
