#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sctrl {

using Vertex = int;  // 1-based identifiers

struct Edge {
    Vertex from = 0;
    Vertex to = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;
using VertexSet = std::set<Vertex>;

// Root set: state vertices carrying a dedicated input.
using RootSet = VertexSet;

/// Immutable digraph over an explicit vertex set. Vertex identifiers are
/// arbitrary positive integers so that subgraphs and grown graphs keep the
/// identifiers of their parent graph. Edge storage has set semantics:
/// duplicates collapse, self-loops are kept.
class Digraph {
public:
    Digraph() = default;
    Digraph(std::vector<Vertex> vertices, EdgeList edges);

    /// Vertices 1..vertex_count. With undirected_expansion every listed pair
    /// {u,v} yields both u->v and v->u.
    static Digraph build(int vertex_count, const EdgeList& pairs,
                         bool undirected_expansion = false);

    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Vertex>& vertices() const { return verts_; }
    const EdgeList& edges() const { return edges_; }

    bool has_vertex(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;

    /// Position of v in vertices(); throws std::invalid_argument if absent.
    int index_of(Vertex v) const;

    const std::vector<Vertex>& out_neighbors(Vertex v) const;
    const std::vector<Vertex>& in_neighbors(Vertex v) const;

    int max_out_degree() const;

    Digraph without_edge(const Edge& e) const;
    Digraph with_edges(const EdgeList& extra) const;
    Digraph with_vertex(Vertex z, const EdgeList& incident) const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.verts_ == b.verts_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Vertex> verts_;           // sorted, unique
    EdgeList edges_;                      // sorted, unique
    std::vector<std::vector<Vertex>> out_, in_;  // per vertex index, sorted
};

/// In-neighbourhood of s over state edges only (no input edges).
VertexSet in_neighborhood(const Digraph& g, const VertexSet& s);

/// Bipartite representation H(A): one left and one right copy per vertex,
/// plus optional extra left vertices appended by callers (dedicated inputs,
/// slack vertices). Indices are 0-based positions; left i < n and right j
/// correspond to g.vertices()[i] and g.vertices()[j].
struct BipartiteGraph {
    int left_count = 0;
    int right_count = 0;
    std::vector<std::vector<int>> adj;  // left index -> sorted right indices

    void add_left(std::vector<int> rights);
};

BipartiteGraph bipartite_of(const Digraph& g);

struct Matching {
    std::vector<int> left_match;   // left index -> right index or -1
    std::vector<int> right_match;  // right index -> left index or -1
    int size = 0;

    std::vector<int> unmatched_left() const;
    std::vector<int> unmatched_right() const;
};

/// Hopcroft-Karp with fixed ascending iteration order; deterministic.
Matching maximum_matching(const BipartiteGraph& h);

/// Grows an existing matching by alternating paths rooted at the given
/// unmatched left vertices only. Previously matched left vertices stay
/// matched, so a maximum matching of a sub-bipartite-graph stays maximum
/// when extra left vertices are appended.
void augment_from_lefts(const BipartiteGraph& h, Matching& m,
                        const std::vector<int>& lefts);

struct SccDag {
    std::vector<VertexSet> components;        // ordered by smallest member
    std::vector<int> component_of_index;      // vertex index -> component
    std::vector<std::pair<int, int>> dag_edges;  // sorted, unique, acyclic
    std::vector<int> in_degree, out_degree;   // per component, in the DAG

    std::vector<int> source_components() const;  // dag in-degree 0
};

SccDag scc_dag(const Digraph& g);

/// All vertices on a directed path from some source (sources included).
VertexSet reachable_from(const Digraph& g, const VertexSet& sources);

std::string to_string(const VertexSet& s);
std::string to_string(const Edge& e);

}  // namespace sctrl
