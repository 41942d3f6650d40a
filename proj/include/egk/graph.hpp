#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace egk {

using Edge = std::pair<int, int>;
using VertexList = std::vector<int>;

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
// sorted so that iteration order (and everything downstream) is
// deterministic. Construction validates simplicity: self-loops and
// duplicate edges are rejected.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        adj_.resize(static_cast<std::size_t>(n));
    }

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (const auto& [u, v] : edges) g.add_edge(u, v);
        g.finish();
        return g;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }

    int degree(int v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }

    const VertexList& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Copy of the graph without one edge.
    Graph without_edge(int u, int v) const {
        if (!has_edge(u, v)) throw std::invalid_argument("without_edge: no such edge");
        Graph g(vertex_count());
        for (int a = 0; a < vertex_count(); ++a)
            for (int b : neighbors(a))
                if (a < b && !((a == std::min(u, v)) && (b == std::max(u, v)))) g.add_edge(a, b);
        g.finish();
        return g;
    }

    // Copy of the graph without one vertex; remaining vertices are
    // relabeled to 0..n-2 preserving order (old id w maps to w or w-1).
    Graph without_vertex(int v) const {
        check_vertex(v);
        Graph g(vertex_count() - 1);
        auto relabel = [v](int w) { return w < v ? w : w - 1; };
        for (int a = 0; a < vertex_count(); ++a) {
            if (a == v) continue;
            for (int b : neighbors(a))
                if (a < b && b != v) g.add_edge(relabel(a), relabel(b));
        }
        g.finish();
        return g;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0," +
                                        std::to_string(vertex_count()) + ")");
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        ++m_;
    }

    void finish() {
        for (auto& a : adj_) {
            std::sort(a.begin(), a.end());
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                throw std::invalid_argument("duplicate edge in graph construction");
        }
    }

    std::vector<VertexList> adj_;
    int m_ = 0;
};

struct DegreeProfile {
    int min_degree = 0;  // 0 for the empty graph
    int max_degree = 0;
    std::vector<int> degrees;  // indexed by vertex
};

inline DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    const int n = g.vertex_count();
    p.degrees.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) p.degrees[static_cast<std::size_t>(v)] = g.degree(v);
    if (n > 0) {
        auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
        p.min_degree = *lo;
        p.max_degree = *hi;
    }
    return p;
}

inline bool is_regular(const Graph& g, int d) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<VertexList> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<VertexList> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out[static_cast<std::size_t>(id)].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = id;
                    q.push(w);
                }
        }
        std::sort(out[static_cast<std::size_t>(id)].begin(), out[static_cast<std::size_t>(id)].end());
    }
    return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

struct InducedSubgraph {
    Graph graph;
    VertexList to_old;         // new id -> old id (sorted)
    std::vector<int> to_new;   // old id -> new id, -1 if absent
};

// Induced subgraph on a set of vertices. Duplicate ids are rejected.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexList& vertices) {
    InducedSubgraph s;
    s.to_old = vertices;
    std::sort(s.to_old.begin(), s.to_old.end());
    if (std::adjacent_find(s.to_old.begin(), s.to_old.end()) != s.to_old.end())
        throw std::invalid_argument("induced_subgraph: duplicate vertex id");
    s.to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < s.to_old.size(); ++i) {
        int v = s.to_old[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex id out of range");
        s.to_new[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (int old_u : s.to_old)
        for (int old_v : g.neighbors(old_u))
            if (old_u < old_v && s.to_new[static_cast<std::size_t>(old_v)] != -1)
                es.emplace_back(s.to_new[static_cast<std::size_t>(old_u)],
                                s.to_new[static_cast<std::size_t>(old_v)]);
    s.graph = Graph::from_edges(static_cast<int>(s.to_old.size()), es);
    return s;
}

// True if `sub` is sorted and contained in 0..n-1 without duplicates.
inline bool is_valid_vertex_set(const Graph& g, const VertexList& set) {
    if (!std::is_sorted(set.begin(), set.end())) return false;
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) return false;
    return set.empty() || (set.front() >= 0 && set.back() < g.vertex_count());
}

inline VertexList sorted_copy(VertexList v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace egk
