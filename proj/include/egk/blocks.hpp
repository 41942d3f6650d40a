#pragma once

#include "egk/graph.hpp"

namespace egk {

// A block: maximal subgraph without a cut vertex of its own. Bridges show
// up as 2-vertex/1-edge blocks; isolated vertices as 1-vertex/0-edge
// blocks.
struct Block {
    VertexList vertices;       // sorted
    std::vector<Edge> edges;   // (u,v) with u < v, sorted
    bool is_bridge() const { return edges.size() == 1; }
};

struct BlockCutTree {
    std::vector<Block> blocks;                  // sorted by vertex list
    VertexList cut_vertices;                    // sorted
    std::vector<VertexList> blocks_of_vertex;   // vertex -> sorted block indices
};

// Iterative Tarjan–Hopcroft biconnected components.
inline BlockCutTree block_cut_tree(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Edge>> raw_blocks;
    std::vector<Edge> edge_stack;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        std::size_t next;       // index into neighbors(v)
        bool skipped_parent;
    };
    std::vector<Frame> stack;

    for (int s = 0; s < n; ++s) {
        if (disc[static_cast<std::size_t>(s)] != -1) continue;
        if (g.degree(s) == 0) {
            disc[static_cast<std::size_t>(s)] = timer++;
            raw_blocks.push_back({});  // trivial block, vertex added later
            raw_blocks.back().push_back({s, s});
            continue;
        }
        disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
        stack.push_back({s, -1, 0, false});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (w == f.parent && !f.skipped_parent) {
                    f.skipped_parent = true;
                    continue;
                }
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    edge_stack.push_back({f.v, w});
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    stack.push_back({w, f.v, 0, false});
                } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.push_back({f.v, w});
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                int v = f.v, parent = f.parent;
                stack.pop_back();
                if (parent == -1) break;
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(parent)]) {
                    // parent closes a block: pop edges down to (parent, v)
                    std::vector<Edge> blk;
                    for (;;) {
                        Edge e = edge_stack.back();
                        edge_stack.pop_back();
                        blk.push_back(e);
                        if (e.first == parent && e.second == v) break;
                    }
                    raw_blocks.push_back(std::move(blk));
                }
            }
        }
    }

    BlockCutTree t;
    t.blocks.reserve(raw_blocks.size());
    for (auto& edges : raw_blocks) {
        Block b;
        if (edges.size() == 1 && edges[0].first == edges[0].second) {
            b.vertices = {edges[0].first};  // isolated vertex marker
        } else {
            for (auto& [u, v] : edges) {
                if (u > v) std::swap(u, v);
                b.vertices.push_back(u);
                b.vertices.push_back(v);
            }
            std::sort(b.vertices.begin(), b.vertices.end());
            b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
            std::sort(edges.begin(), edges.end());
            b.edges = std::move(edges);
        }
        t.blocks.push_back(std::move(b));
    }
    std::sort(t.blocks.begin(), t.blocks.end(),
              [](const Block& a, const Block& b) { return a.vertices < b.vertices; });

    t.blocks_of_vertex.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < t.blocks.size(); ++i)
        for (int v : t.blocks[i].vertices)
            t.blocks_of_vertex[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    for (int v = 0; v < n; ++v)
        if (t.blocks_of_vertex[static_cast<std::size_t>(v)].size() >= 2) t.cut_vertices.push_back(v);
    return t;
}

inline std::vector<Edge> bridges(const Graph& g) {
    std::vector<Edge> out;
    for (const auto& b : block_cut_tree(g).blocks)
        if (b.is_bridge()) out.push_back(b.edges[0]);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_bridge(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    auto bs = bridges(g);
    return std::binary_search(bs.begin(), bs.end(), Edge{u, v});
}

// 2-connected: at least 3 vertices, connected, no cut vertex.
inline bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    if (!is_connected(g)) return false;
    return block_cut_tree(g).cut_vertices.empty();
}

}  // namespace egk
