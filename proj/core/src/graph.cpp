#include "sctrl/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sctrl {

Digraph::Digraph(std::vector<Vertex> vertices, EdgeList edges)
    : verts_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    for (Vertex v : verts_) {
        if (v <= 0) throw std::invalid_argument("vertex identifiers must be positive");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    out_.assign(verts_.size(), {});
    in_.assign(verts_.size(), {});
    for (const Edge& e : edges_) {
        if (!has_vertex(e.from) || !has_vertex(e.to)) {
            throw std::invalid_argument("edge endpoint " + to_string(e) +
                                        " is not a declared vertex");
        }
        out_[index_of(e.from)].push_back(e.to);
        in_[index_of(e.to)].push_back(e.from);
    }
    // edges_ sorted by (from,to) => out_ lists are sorted; in_ needs a sort
    for (auto& nbrs : in_) std::sort(nbrs.begin(), nbrs.end());
}

Digraph Digraph::build(int vertex_count, const EdgeList& pairs,
                       bool undirected_expansion) {
    if (vertex_count <= 0) throw std::invalid_argument("vertex count must be positive");
    std::vector<Vertex> verts(vertex_count);
    for (int i = 0; i < vertex_count; ++i) verts[i] = i + 1;
    EdgeList edges;
    edges.reserve(pairs.size() * (undirected_expansion ? 2 : 1));
    for (const Edge& e : pairs) {
        if (e.from < 1 || e.from > vertex_count || e.to < 1 || e.to > vertex_count) {
            throw std::invalid_argument("edge endpoint out of range: " + to_string(e));
        }
        edges.push_back(e);
        if (undirected_expansion) edges.push_back({e.to, e.from});
    }
    return Digraph(std::move(verts), std::move(edges));
}

bool Digraph::has_vertex(Vertex v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

int Digraph::index_of(Vertex v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
    }
    return static_cast<int>(it - verts_.begin());
}

const std::vector<Vertex>& Digraph::out_neighbors(Vertex v) const {
    return out_[index_of(v)];
}

const std::vector<Vertex>& Digraph::in_neighbors(Vertex v) const {
    return in_[index_of(v)];
}

int Digraph::max_out_degree() const {
    int m = 0;
    for (const auto& nbrs : out_) m = std::max(m, static_cast<int>(nbrs.size()));
    return m;
}

Digraph Digraph::without_edge(const Edge& e) const {
    EdgeList edges;
    edges.reserve(edges_.size());
    for (const Edge& x : edges_) {
        if (x != e) edges.push_back(x);
    }
    return Digraph(verts_, std::move(edges));
}

Digraph Digraph::with_edges(const EdgeList& extra) const {
    EdgeList edges = edges_;
    edges.insert(edges.end(), extra.begin(), extra.end());
    return Digraph(verts_, std::move(edges));
}

Digraph Digraph::with_vertex(Vertex z, const EdgeList& incident) const {
    if (has_vertex(z)) throw std::invalid_argument("vertex already present");
    std::vector<Vertex> verts = verts_;
    verts.push_back(z);
    EdgeList edges = edges_;
    for (const Edge& e : incident) {
        if (e.from != z && e.to != z) {
            throw std::invalid_argument("incident edge does not touch the new vertex");
        }
        edges.push_back(e);
    }
    return Digraph(std::move(verts), std::move(edges));
}

VertexSet in_neighborhood(const Digraph& g, const VertexSet& s) {
    VertexSet result;
    for (Vertex v : s) {
        const auto& nbrs = g.in_neighbors(v);
        result.insert(nbrs.begin(), nbrs.end());
    }
    return result;
}

void BipartiteGraph::add_left(std::vector<int> rights) {
    std::sort(rights.begin(), rights.end());
    rights.erase(std::unique(rights.begin(), rights.end()), rights.end());
    adj.push_back(std::move(rights));
    ++left_count;
}

BipartiteGraph bipartite_of(const Digraph& g) {
    BipartiteGraph h;
    h.left_count = h.right_count = g.vertex_count();
    h.adj.assign(g.vertex_count(), {});
    for (const Edge& e : g.edges()) {
        h.adj[g.index_of(e.from)].push_back(g.index_of(e.to));
    }
    return h;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// One phase of Hopcroft-Karp: BFS layering from unmatched lefts, then DFS.
bool hk_bfs(const BipartiteGraph& h, const Matching& m, std::vector<int>& dist) {
    std::deque<int> queue;
    dist.assign(h.left_count, kInf);
    for (int u = 0; u < h.left_count; ++u) {
        if (m.left_match[u] < 0) {
            dist[u] = 0;
            queue.push_back(u);
        }
    }
    bool found = false;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int r : h.adj[u]) {
            int w = m.right_match[r];
            if (w < 0) {
                found = true;
            } else if (dist[w] == kInf) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return found;
}

bool hk_dfs(const BipartiteGraph& h, Matching& m, std::vector<int>& dist, int u) {
    for (int r : h.adj[u]) {
        int w = m.right_match[r];
        if (w < 0 || (dist[w] == dist[u] + 1 && hk_dfs(h, m, dist, w))) {
            m.left_match[u] = r;
            m.right_match[r] = u;
            return true;
        }
    }
    dist[u] = kInf;
    return false;
}

bool kuhn_dfs(const BipartiteGraph& h, Matching& m, std::vector<char>& visited, int u) {
    for (int r : h.adj[u]) {
        if (visited[r]) continue;
        visited[r] = 1;
        int w = m.right_match[r];
        if (w < 0 || kuhn_dfs(h, m, visited, w)) {
            m.left_match[u] = r;
            m.right_match[r] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<int> Matching::unmatched_left() const {
    std::vector<int> result;
    for (int u = 0; u < static_cast<int>(left_match.size()); ++u) {
        if (left_match[u] < 0) result.push_back(u);
    }
    return result;
}

std::vector<int> Matching::unmatched_right() const {
    std::vector<int> result;
    for (int r = 0; r < static_cast<int>(right_match.size()); ++r) {
        if (right_match[r] < 0) result.push_back(r);
    }
    return result;
}

Matching maximum_matching(const BipartiteGraph& h) {
    Matching m;
    m.left_match.assign(h.left_count, -1);
    m.right_match.assign(h.right_count, -1);
    std::vector<int> dist;
    while (hk_bfs(h, m, dist)) {
        for (int u = 0; u < h.left_count; ++u) {
            if (m.left_match[u] < 0 && hk_dfs(h, m, dist, u)) ++m.size;
        }
    }
    return m;
}

void augment_from_lefts(const BipartiteGraph& h, Matching& m,
                        const std::vector<int>& lefts) {
    m.left_match.resize(h.left_count, -1);
    m.right_match.resize(h.right_count, -1);
    std::vector<char> visited(h.right_count, 0);
    for (int u : lefts) {
        if (m.left_match[u] >= 0) continue;
        std::fill(visited.begin(), visited.end(), 0);
        if (kuhn_dfs(h, m, visited, u)) ++m.size;
    }
}

namespace {

// Iterative Tarjan.
struct TarjanState {
    std::vector<int> index, lowlink;
    std::vector<char> on_stack;
    std::vector<int> stack;
    std::vector<std::vector<int>> raw_components;  // vertex indices
    int next_index = 0;
};

void tarjan_from(const Digraph& g, int start, TarjanState& st) {
    struct Frame {
        int v;
        size_t child = 0;
    };
    std::vector<Frame> frames{{start}};
    st.index[start] = st.lowlink[start] = st.next_index++;
    st.stack.push_back(start);
    st.on_stack[start] = 1;
    while (!frames.empty()) {
        Frame& f = frames.back();
        const Vertex vid = g.vertices()[f.v];
        const auto& nbrs = g.out_neighbors(vid);
        if (f.child < nbrs.size()) {
            int w = g.index_of(nbrs[f.child++]);
            if (st.index[w] < 0) {
                st.index[w] = st.lowlink[w] = st.next_index++;
                st.stack.push_back(w);
                st.on_stack[w] = 1;
                frames.push_back({w});
            } else if (st.on_stack[w]) {
                st.lowlink[f.v] = std::min(st.lowlink[f.v], st.index[w]);
            }
        } else {
            if (st.lowlink[f.v] == st.index[f.v]) {
                std::vector<int> comp;
                int w;
                do {
                    w = st.stack.back();
                    st.stack.pop_back();
                    st.on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != f.v);
                st.raw_components.push_back(std::move(comp));
            }
            int v = f.v;
            frames.pop_back();
            if (!frames.empty()) {
                st.lowlink[frames.back().v] =
                    std::min(st.lowlink[frames.back().v], st.lowlink[v]);
            }
        }
    }
}

}  // namespace

std::vector<int> SccDag::source_components() const {
    std::vector<int> result;
    for (int c = 0; c < static_cast<int>(components.size()); ++c) {
        if (in_degree[c] == 0) result.push_back(c);
    }
    return result;
}

SccDag scc_dag(const Digraph& g) {
    const int n = g.vertex_count();
    TarjanState st;
    st.index.assign(n, -1);
    st.lowlink.assign(n, 0);
    st.on_stack.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        if (st.index[v] < 0) tarjan_from(g, v, st);
    }

    // Order components by their smallest vertex identifier.
    std::vector<std::pair<Vertex, int>> order;
    for (int c = 0; c < static_cast<int>(st.raw_components.size()); ++c) {
        Vertex min_id = std::numeric_limits<Vertex>::max();
        for (int idx : st.raw_components[c]) {
            min_id = std::min(min_id, g.vertices()[idx]);
        }
        order.emplace_back(min_id, c);
    }
    std::sort(order.begin(), order.end());

    SccDag dag;
    dag.component_of_index.assign(n, -1);
    for (const auto& [min_id, raw] : order) {
        VertexSet comp;
        for (int idx : st.raw_components[raw]) {
            comp.insert(g.vertices()[idx]);
            dag.component_of_index[idx] = static_cast<int>(dag.components.size());
        }
        dag.components.push_back(std::move(comp));
    }
    for (const Edge& e : g.edges()) {
        int a = dag.component_of_index[g.index_of(e.from)];
        int b = dag.component_of_index[g.index_of(e.to)];
        if (a != b) dag.dag_edges.emplace_back(a, b);
    }
    std::sort(dag.dag_edges.begin(), dag.dag_edges.end());
    dag.dag_edges.erase(std::unique(dag.dag_edges.begin(), dag.dag_edges.end()),
                        dag.dag_edges.end());
    dag.in_degree.assign(dag.components.size(), 0);
    dag.out_degree.assign(dag.components.size(), 0);
    for (const auto& [a, b] : dag.dag_edges) {
        ++dag.out_degree[a];
        ++dag.in_degree[b];
    }
    return dag;
}

VertexSet reachable_from(const Digraph& g, const VertexSet& sources) {
    VertexSet seen;
    std::vector<Vertex> stack;
    for (Vertex v : sources) {
        g.index_of(v);  // validates membership
        if (seen.insert(v).second) stack.push_back(v);
    }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.out_neighbors(v)) {
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen;
}

std::string to_string(const VertexSet& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (Vertex v : s) {
        if (!first) out << ", ";
        out << 'v' << v;
        first = false;
    }
    out << '}';
    return out.str();
}

std::string to_string(const Edge& e) {
    return "(v" + std::to_string(e.from) + ", v" + std::to_string(e.to) + ")";
}

}  // namespace sctrl
