#pragma once

#include <optional>
#include <queue>
#include <variant>

#include "egk/graph.hpp"

namespace egk {

// Canonical 2-coloring: per component, the side containing the smallest
// vertex id goes to side_a. Both sides sorted.
struct Bipartition {
    VertexList side_a;
    VertexList side_b;
};

// Witness of non-bipartiteness: a simple cycle of odd length, listed in
// order (consecutive vertices adjacent, last adjacent to first).
struct OddCycle {
    VertexList cycle;
};

namespace detail {

// Walks BFS parent pointers from u and v up to their lowest common
// ancestor and stitches the two paths into a simple cycle through edge uv.
inline OddCycle odd_cycle_from_conflict(const std::vector<int>& parent, const std::vector<int>& depth,
                                        int u, int v) {
    VertexList from_u, from_v;
    int a = u, b = v;
    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
        from_u.push_back(a);
        a = parent[static_cast<std::size_t>(a)];
    }
    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
        from_v.push_back(b);
        b = parent[static_cast<std::size_t>(b)];
    }
    while (a != b) {
        from_u.push_back(a);
        from_v.push_back(b);
        a = parent[static_cast<std::size_t>(a)];
        b = parent[static_cast<std::size_t>(b)];
    }
    OddCycle oc;
    oc.cycle = from_u;                    // u .. just below lca
    oc.cycle.push_back(a);                // lca
    for (auto it = from_v.rbegin(); it != from_v.rend(); ++it) oc.cycle.push_back(*it);
    return oc;  // u ... lca ... v, with the closing edge v-u
}

}  // namespace detail

// BFS 2-coloring over every component (deterministic id order). Returns
// either the canonical bipartition or an odd-cycle witness.
inline std::variant<Bipartition, OddCycle> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;  // component minimum -> side_a
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    parent[static_cast<std::size_t>(w)] = v;
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                    q.push(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    return detail::odd_cycle_from_conflict(parent, depth, v, w);
                }
            }
        }
    }
    Bipartition bip;
    for (int v = 0; v < n; ++v)
        (color[static_cast<std::size_t>(v)] == 0 ? bip.side_a : bip.side_b).push_back(v);
    return bip;
}

inline std::optional<Bipartition> try_bipartition(const Graph& g) {
    auto r = bipartition(g);
    if (auto* bip = std::get_if<Bipartition>(&r)) return *bip;
    return std::nullopt;
}

inline bool is_bipartite(const Graph& g) { return try_bipartition(g).has_value(); }

// Checks that the two sides partition the vertex set and no edge has both
// endpoints in the same side.
inline bool is_valid_bipartition(const Graph& g, const Bipartition& bip) {
    const int n = g.vertex_count();
    if (static_cast<int>(bip.side_a.size() + bip.side_b.size()) != n) return false;
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int v : bip.side_a) {
        if (v < 0 || v >= n || side[static_cast<std::size_t>(v)] != -1) return false;
        side[static_cast<std::size_t>(v)] = 0;
    }
    for (int v : bip.side_b) {
        if (v < 0 || v >= n || side[static_cast<std::size_t>(v)] != -1) return false;
        side[static_cast<std::size_t>(v)] = 1;
    }
    for (const auto& [u, v] : g.edges())
        if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) return false;
    return true;
}

// Checks an odd-cycle witness: odd length >= 3, distinct vertices,
// consecutive adjacency including the closing edge.
inline bool is_valid_odd_cycle(const Graph& g, const OddCycle& oc) {
    const auto& c = oc.cycle;
    if (c.size() < 3 || c.size() % 2 == 0) return false;
    VertexList sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (sorted.front() < 0 || sorted.back() >= g.vertex_count()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
    return true;
}

}  // namespace egk
