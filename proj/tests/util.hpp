#pragma once

// Shared test helpers: tiny named-graph builders plus brute-force
// reference implementations that deliberately share no code with the
// library algorithms under test.

#include <bit>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "egk/bubble.hpp"
#include "egk/graph.hpp"

namespace testutil {

inline egk::Graph path(int n) {
    std::vector<egk::Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return egk::Graph::from_edges(n, e);
}

inline egk::Graph cycle(int n) {
    std::vector<egk::Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return egk::Graph::from_edges(n, e);
}

inline egk::Graph complete(int n) {
    std::vector<egk::Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return egk::Graph::from_edges(n, e);
}

// Parts {0..a-1} and {a..a+b-1}.
inline egk::Graph complete_bipartite(int a, int b) {
    std::vector<egk::Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return egk::Graph::from_edges(a + b, e);
}

inline egk::Graph star(int leaves) { return complete_bipartite(1, leaves); }

inline egk::Graph petersen() {
    return egk::Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                       {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                       {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline egk::Graph prism() {  // triangular prism: cubic, non-bipartite
    return egk::Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                                      {0, 3}, {1, 4}, {2, 5}});
}

inline egk::Graph k33() { return complete_bipartite(3, 3); }
inline egk::Graph cube() {  // Q3, cubic bipartite
    std::vector<egk::Edge> e;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) e.emplace_back(v, v ^ (1 << b));
    return egk::Graph::from_edges(8, e);
}

// Disjoint union with the second graph's ids shifted.
inline egk::Graph disjoint_union(const egk::Graph& a, const egk::Graph& b) {
    std::vector<egk::Edge> e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return egk::Graph::from_edges(a.vertex_count() + b.vertex_count(), e);
}

// Core graph plus bubbles, each bridged from its contact to a core
// vertex. Built by hand, independently of the library's own composer.
inline egk::Graph with_bubbles(const egk::Graph& core,
                               const std::vector<std::pair<int, egk::BubbleExample>>& attach) {
    std::vector<egk::Edge> e = core.edges();
    int base = core.vertex_count();
    for (const auto& [anchor, bubble] : attach) {
        for (auto [u, v] : bubble.graph.edges()) e.emplace_back(u + base, v + base);
        e.emplace_back(anchor, bubble.cert.contact + base);
        base += bubble.graph.vertex_count();
    }
    return egk::Graph::from_edges(base, e);
}

// Single core vertex carrying three 5-vertex bubbles; cubic, tight,
// alpha = mu = 7 on 16 vertices.
inline egk::Graph spider16() {
    auto b5 = egk::bubble_catalog("b5");
    return with_bubbles(egk::Graph(1), {{0, b5}, {0, b5}, {0, b5}});
}

// Complete bipartite 2x3 core (the 3-side deficient) with two 5-vertex
// bubbles and one 7-vertex bubble; cubic, tight, alpha = mu = 10 on 22
// vertices.
inline egk::Graph triple22() {
    auto b5 = egk::bubble_catalog("b5");
    auto b7 = egk::bubble_catalog("b7");
    return with_bubbles(complete_bipartite(2, 3), {{2, b5}, {3, b5}, {4, b7}});
}

// ---------------------------------------------------------------------------
// Reference oracles: plain subset/assignment enumeration, n <= ~22.

inline bool ref_independent(const egk::Graph& g, std::uint32_t s) {
    for (auto [u, v] : g.edges())
        if (((s >> u) & 1) && ((s >> v) & 1)) return false;
    return true;
}

inline int ref_alpha(const egk::Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s)
        if (ref_independent(g, s)) best = std::max(best, std::popcount(s));
    return best;
}

// Maximum matching by trying edges in order, include/exclude.
inline int ref_mu_go(const std::vector<egk::Edge>& es, std::size_t i, std::uint32_t used) {
    if (i == es.size()) return 0;
    int best = ref_mu_go(es, i + 1, used);
    auto [u, v] = es[i];
    if (!((used >> u) & 1) && !((used >> v) & 1))
        best = std::max(best, 1 + ref_mu_go(es, i + 1, used | (1u << u) | (1u << v)));
    return best;
}

inline int ref_mu(const egk::Graph& g) { return ref_mu_go(g.edges(), 0, 0); }

inline bool ref_bipartite(const egk::Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Cut vertices by deletion + component count (quadratic, reference only).
inline std::vector<int> ref_cut_vertices(const egk::Graph& g) {
    std::vector<int> out;
    auto base = egk::connected_components(g).size();
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::size_t comps = egk::connected_components(g.without_vertex(v)).size();
        std::size_t expect = base - (g.degree(v) == 0 ? 1 : 0);
        if (comps > expect) out.push_back(v);
    }
    return out;
}

inline std::vector<egk::Edge> ref_bridges(const egk::Graph& g) {
    std::vector<egk::Edge> out;
    for (auto [u, v] : g.edges())
        if (egk::connected_components(g.without_edge(u, v)).size() >
            egk::connected_components(g).size())
            out.emplace_back(u, v);
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(EGK_FIXTURE_DIR) + "/" + name;
}

}  // namespace testutil
