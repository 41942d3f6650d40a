#pragma once

#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <variant>

#include "egk/bipartite.hpp"
#include "egk/graph.hpp"

namespace egk {

// Edge set with pairwise-disjoint endpoints, canonicalized to (u < v)
// pairs in lexicographic order.
struct Matching {
    std::vector<Edge> edges;
    int size() const { return static_cast<int>(edges.size()); }
};

inline Matching matching_from_mates(const std::vector<int>& mate) {
    Matching m;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[static_cast<std::size_t>(v)] > v)
            m.edges.emplace_back(v, mate[static_cast<std::size_t>(v)]);
    return m;
}

inline bool verify_matching(const Graph& g, const Matching& m) {
    std::vector<char> hit(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) return false;
        if (u == v || !g.has_edge(u, v)) return false;
        if (hit[static_cast<std::size_t>(u)] || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(u)] = hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

// mate[] view of a matching, validating it on the way.
inline std::vector<int> mates(const Graph& g, const Matching& m) {
    if (!verify_matching(g, m)) throw std::invalid_argument("mates: not a matching of this graph");
    std::vector<int> mate(static_cast<std::size_t>(g.vertex_count()), -1);
    for (const auto& [u, v] : m.edges) {
        mate[static_cast<std::size_t>(u)] = v;
        mate[static_cast<std::size_t>(v)] = u;
    }
    return mate;
}

// ---------------------------------------------------------------------------
// Bipartite maximum matching (Hopcroft–Karp), deterministic in vertex order.

inline std::vector<int> hopcroft_karp_mates(const Graph& g, const Bipartition& bip) {
    if (!is_valid_bipartition(g, bip))
        throw std::invalid_argument("hopcroft_karp: invalid bipartition for graph");
    const int n = g.vertex_count();
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    for (int u : bip.side_a)
        for (int v : g.neighbors(u))
            if (mate[static_cast<std::size_t>(u)] == -1 && mate[static_cast<std::size_t>(v)] == -1) {
                mate[static_cast<std::size_t>(u)] = v;
                mate[static_cast<std::size_t>(v)] = u;
            }

    std::vector<int> dist(static_cast<std::size_t>(n), 0);
    auto bfs = [&]() {
        std::queue<int> q;
        bool reachable_free = false;
        for (int u : bip.side_a) {
            if (mate[static_cast<std::size_t>(u)] == -1) {
                dist[static_cast<std::size_t>(u)] = 0;
                q.push(u);
            } else {
                dist[static_cast<std::size_t>(u)] = kInf;
            }
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                int w = mate[static_cast<std::size_t>(v)];
                if (w == -1) {
                    reachable_free = true;
                } else if (dist[static_cast<std::size_t>(w)] == kInf) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    q.push(w);
                }
            }
        }
        return reachable_free;
    };
    auto dfs = [&](auto&& self, int u) -> bool {
        for (int v : g.neighbors(u)) {
            int w = mate[static_cast<std::size_t>(v)];
            if (w == -1 || (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] + 1 &&
                            self(self, w))) {
                mate[static_cast<std::size_t>(u)] = v;
                mate[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        dist[static_cast<std::size_t>(u)] = kInf;
        return false;
    };
    while (bfs())
        for (int u : bip.side_a)
            if (mate[static_cast<std::size_t>(u)] == -1) dfs(dfs, u);
    return mate;
}

inline Matching hopcroft_karp(const Graph& g, const Bipartition& bip) {
    return matching_from_mates(hopcroft_karp_mates(g, bip));
}

namespace detail {

// Vertices reachable from unmatched side_a vertices by alternating paths
// (non-matching edge out of side_a, matching edge out of side_b).
inline std::vector<char> alternating_reachable(const Graph& g, const Bipartition& bip,
                                               const std::vector<int>& mate) {
    std::vector<char> in_z(static_cast<std::size_t>(g.vertex_count()), 0);
    std::queue<int> q;
    for (int u : bip.side_a)
        if (mate[static_cast<std::size_t>(u)] == -1) {
            in_z[static_cast<std::size_t>(u)] = 1;
            q.push(u);
        }
    while (!q.empty()) {
        int u = q.front();  // always a side_a vertex
        q.pop();
        for (int v : g.neighbors(u)) {
            if (v == mate[static_cast<std::size_t>(u)] || in_z[static_cast<std::size_t>(v)]) continue;
            in_z[static_cast<std::size_t>(v)] = 1;
            int w = mate[static_cast<std::size_t>(v)];
            if (w != -1 && !in_z[static_cast<std::size_t>(w)]) {
                in_z[static_cast<std::size_t>(w)] = 1;
                q.push(w);
            }
        }
    }
    return in_z;
}

}  // namespace detail

struct VertexCover {
    VertexList vertices;  // sorted
};

inline bool is_vertex_cover(const Graph& g, const VertexCover& c) {
    if (!is_valid_vertex_set(g, c.vertices)) return false;
    for (const auto& [u, v] : g.edges())
        if (!std::binary_search(c.vertices.begin(), c.vertices.end(), u) &&
            !std::binary_search(c.vertices.begin(), c.vertices.end(), v))
            return false;
    return true;
}

// Minimum vertex cover from a maximum bipartite matching (König's
// theorem): with Z the alternating-reachable set, the cover is
// (side_a \ Z) ∪ (side_b ∩ Z). Throws if the matching is not maximum,
// detected by the cover check.
inline VertexCover koenig_cover(const Graph& g, const Bipartition& bip, const Matching& m) {
    if (!is_valid_bipartition(g, bip))
        throw std::invalid_argument("koenig_cover: invalid bipartition for graph");
    auto mate = mates(g, m);
    auto in_z = detail::alternating_reachable(g, bip, mate);
    VertexCover cover;
    for (int u : bip.side_a)
        if (!in_z[static_cast<std::size_t>(u)]) cover.vertices.push_back(u);
    for (int v : bip.side_b)
        if (in_z[static_cast<std::size_t>(v)]) cover.vertices.push_back(v);
    std::sort(cover.vertices.begin(), cover.vertices.end());
    if (static_cast<int>(cover.vertices.size()) != m.size() || !is_vertex_cover(g, cover))
        throw std::invalid_argument("koenig_cover: matching is not maximum");
    return cover;
}

// Hall condition witness: a set S within one side with |N(S)| < |S|.
struct HallViolator {
    VertexList deficient_set;  // S, sorted
    VertexList neighborhood;   // N(S), sorted
};

enum class Side { a, b };

namespace detail {

inline Bipartition oriented(const Bipartition& bip, Side side) {
    return side == Side::a ? bip : Bipartition{bip.side_b, bip.side_a};
}

}  // namespace detail

// If some vertex of `side` is unmatched in a maximum matching, returns a
// Hall violator for that side (S = side ∩ Z for the alternating-reachable
// set Z; then N(S) = otherside ∩ Z and |N(S)| = |S| - #unmatched).
inline std::optional<HallViolator> hall_violator(const Graph& g, const Bipartition& bip, Side side) {
    Bipartition b = detail::oriented(bip, side);
    auto mate = hopcroft_karp_mates(g, b);
    bool saturated = true;
    for (int u : b.side_a)
        if (mate[static_cast<std::size_t>(u)] == -1) saturated = false;
    if (saturated) return std::nullopt;
    auto in_z = detail::alternating_reachable(g, b, mate);
    HallViolator h;
    for (int u : b.side_a)
        if (in_z[static_cast<std::size_t>(u)]) h.deficient_set.push_back(u);
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int u : h.deficient_set)
        for (int v : g.neighbors(u))
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                h.neighborhood.push_back(v);
            }
    std::sort(h.neighborhood.begin(), h.neighborhood.end());
    if (h.neighborhood.size() >= h.deficient_set.size())
        throw std::logic_error("hall_violator: internal error, set is not deficient");
    return h;
}

// Either a matching saturating the requested side, or a Hall violator
// proving none exists.
inline std::variant<Matching, HallViolator> saturating_matching(const Graph& g, const Bipartition& bip,
                                                                Side side) {
    Bipartition b = detail::oriented(bip, side);
    auto mate = hopcroft_karp_mates(g, b);
    bool saturated = true;
    for (int u : b.side_a)
        if (mate[static_cast<std::size_t>(u)] == -1) saturated = false;
    if (saturated) return matching_from_mates(mate);
    return *hall_violator(g, bip, side);
}

// ---------------------------------------------------------------------------
// Maximum matching in general graphs (Edmonds' blossom algorithm, O(V^3)).

inline std::vector<int> blossom_mates(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> match(static_cast<std::size_t>(n), -1), p(static_cast<std::size_t>(n), -1),
        base(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n), 0), in_blossom(static_cast<std::size_t>(n), 0);
    std::vector<int> q;

    auto lca = [&](int a, int b) {
        std::vector<char> mark(static_cast<std::size_t>(n), 0);
        for (;;) {
            a = base[static_cast<std::size_t>(a)];
            mark[static_cast<std::size_t>(a)] = 1;
            if (match[static_cast<std::size_t>(a)] == -1) break;
            a = p[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base[static_cast<std::size_t>(b)];
            if (mark[static_cast<std::size_t>(b)]) return b;
            b = p[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[static_cast<std::size_t>(v)] != b) {
            in_blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = 1;
            in_blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])])] = 1;
            p[static_cast<std::size_t>(v)] = child;
            child = match[static_cast<std::size_t>(v)];
            v = p[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])];
        }
    };
    auto find_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        q.clear();
        q.push_back(root);
        used[static_cast<std::size_t>(root)] = 1;
        for (std::size_t qi = 0; qi < q.size(); ++qi) {
            int v = q[qi];
            for (int to : g.neighbors(v)) {
                if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] ||
                    match[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match[static_cast<std::size_t>(to)] != -1 &&
                     p[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] != -1)) {
                    // odd cycle: contract the blossom at its base
                    int cur_base = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
                            base[static_cast<std::size_t>(i)] = cur_base;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = 1;
                                q.push_back(i);
                            }
                        }
                } else if (p[static_cast<std::size_t>(to)] == -1) {
                    p[static_cast<std::size_t>(to)] = v;
                    if (match[static_cast<std::size_t>(to)] == -1) return to;
                    used[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] = 1;
                    q.push_back(match[static_cast<std::size_t>(to)]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v)  // greedy seed keeps the phase count down
        if (match[static_cast<std::size_t>(v)] == -1)
            for (int to : g.neighbors(v))
                if (match[static_cast<std::size_t>(to)] == -1) {
                    match[static_cast<std::size_t>(v)] = to;
                    match[static_cast<std::size_t>(to)] = v;
                    break;
                }
    for (int v = 0; v < n; ++v) {
        if (match[static_cast<std::size_t>(v)] != -1) continue;
        int u = find_path(v);
        while (u != -1) {
            int pv = p[static_cast<std::size_t>(u)], ppv = match[static_cast<std::size_t>(pv)];
            match[static_cast<std::size_t>(u)] = pv;
            match[static_cast<std::size_t>(pv)] = u;
            u = ppv;
        }
    }
    return match;
}

inline Matching blossom_maximum_matching(const Graph& g) {
    return matching_from_mates(blossom_mates(g));
}

inline int matching_number(const Graph& g) { return blossom_maximum_matching(g).size(); }

}  // namespace egk
