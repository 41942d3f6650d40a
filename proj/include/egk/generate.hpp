#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "egk/bubble.hpp"
#include "egk/graph.hpp"
#include "egk/recognize.hpp"
#include "egk/rng.hpp"

namespace egk {

// ---------------------------------------------------------------------------
// Random generators. All are deterministic in their seed.

// Connected bipartite graph whose low side has uniform degree `low` and
// high side uniform degree `high`. Side sizes are scale*high/g and
// scale*low/g for g = gcd; scale must be at least g so the high-degree
// side fits inside the low side.
inline Graph generate_biregular(int low, int high, int scale, std::uint64_t seed) {
    if (low < 1 || high < low) throw std::invalid_argument("generate_biregular: need 1 <= low <= high");
    const int g = std::gcd(low, high);
    if (scale < g)
        throw std::invalid_argument("generate_biregular: scale must be at least gcd(low, high) = " +
                                    std::to_string(g));
    const int na = scale * (high / g), nb = scale * (low / g);
    Rng rng(seed);
    std::vector<int> stubs;
    for (int v = 0; v < nb; ++v)
        for (int s = 0; s < high; ++s) stubs.push_back(na + v);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        rng.shuffle(stubs);
        std::vector<Edge> edges;
        std::size_t at = 0;
        for (int v = 0; v < na; ++v)
            for (int s = 0; s < low; ++s) edges.emplace_back(v, stubs[at++]);
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        Graph out = Graph::from_edges(na + nb, edges);
        if (!is_connected(out)) continue;
        return out;
    }
    throw std::runtime_error("generate_biregular: exhausted attempts");
}

// Random simple cubic graph on n vertices via stub pairing.
inline Graph random_cubic(int n, std::uint64_t seed, bool require_connected = true) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("random_cubic: order must be even and at least 4");
    Rng rng(seed);
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
        for (int s = 0; s < 3; ++s) stubs.push_back(v);
    for (int attempt = 0; attempt < 50000; ++attempt) {
        rng.shuffle(stubs);
        std::vector<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        Graph out = Graph::from_edges(n, edges);
        if (require_connected && !is_connected(out)) continue;
        return out;
    }
    throw std::runtime_error("random_cubic: exhausted attempts");
}

// ---------------------------------------------------------------------------
// Composer for the tight cubic family: a bipartite core plus 2-connected
// bubbles bridged onto the deficient side.

struct ComposeSpec {
    int core_high = 0;              // size of the fully-saturated core side
    int ell = 3;                    // bubble count; multiple of 3 (0 = bipartite cubic)
    std::vector<int> bubble_sizes;  // ell odd sizes >= 5; defaults to all 5
    std::uint64_t seed = 0;
};

struct ComposedSpecial {
    Graph graph;
    SpecialDecomposition decomposition;
};

inline ComposedSpecial compose_special(const ComposeSpec& spec) {
    const int b = spec.core_high, ell = spec.ell;
    if (ell < 0 || ell % 3 != 0)
        throw std::invalid_argument("compose_special: bubble count must be a multiple of 3");
    const int a = b + ell / 3;
    if (ell == 0 && b < 3)
        throw std::invalid_argument("compose_special: bipartite cubic needs both sides >= 3");
    if (ell > 0 && b == 0 && a != 1)
        throw std::invalid_argument("compose_special: an edgeless core must be a single vertex");
    const int cap = std::min(3, b);  // simple bipartite: core degree of a deficient vertex
    if (b >= 1 && (a > 3 * b || 3 * b > cap * a))
        throw std::invalid_argument("compose_special: no degree assignment fits this core shape");
    std::vector<int> sizes = spec.bubble_sizes;
    if (sizes.empty()) sizes.assign(static_cast<std::size_t>(ell), 5);
    if (static_cast<int>(sizes.size()) != ell)
        throw std::invalid_argument("compose_special: need one bubble size per bubble");
    for (int s : sizes)
        if (s < 5 || s % 2 == 0)
            throw std::invalid_argument("compose_special: bubble sizes must be odd and >= 5");

    Rng rng(spec.seed);
    // deficient-side degrees within the core: each in [1,3] (or the single
    // degree-0 vertex when the core has no saturated side)
    std::vector<int> deg(static_cast<std::size_t>(a), b >= 1 ? 1 : 0);
    if (b >= 1) {
        int rest = 3 * b - a;
        if (rest < 0) throw std::logic_error("compose_special: degree bookkeeping failed");
        while (rest > 0) {
            int u = rng.below(a);
            if (deg[static_cast<std::size_t>(u)] < cap) {
                ++deg[static_cast<std::size_t>(u)];
                --rest;
            }
        }
    }

    // core: vertices 0..a-1 deficient side, a..a+b-1 saturated side
    std::vector<Edge> core_edges;
    if (b >= 1) {
        std::vector<int> stubs;
        for (int v = 0; v < b; ++v)
            for (int s = 0; s < 3; ++s) stubs.push_back(a + v);
        bool done = false;
        for (int attempt = 0; attempt < 50000 && !done; ++attempt) {
            rng.shuffle(stubs);
            core_edges.clear();
            std::size_t at = 0;
            for (int u = 0; u < a; ++u)
                for (int s = 0; s < deg[static_cast<std::size_t>(u)]; ++s)
                    core_edges.emplace_back(u, stubs[at++]);
            std::sort(core_edges.begin(), core_edges.end());
            if (std::adjacent_find(core_edges.begin(), core_edges.end()) != core_edges.end())
                continue;
            if (!is_connected(Graph::from_edges(a + b, core_edges))) continue;
            done = true;
        }
        if (!done) throw std::runtime_error("compose_special: no connected simple core found");
    }

    // deficiency slots, one bridge target per bubble
    std::vector<int> slots;
    for (int u = 0; u < a; ++u)
        for (int s = deg[static_cast<std::size_t>(u)]; s < 3; ++s) slots.push_back(u);
    if (static_cast<int>(slots.size()) != ell)
        throw std::logic_error("compose_special: slot bookkeeping failed");
    rng.shuffle(slots);

    std::vector<Edge> edges = core_edges;
    SpecialDecomposition d;
    for (int v = 0; v < a; ++v) d.core_i.push_back(v);
    for (int v = a; v < a + b; ++v) d.core_r.push_back(v);
    d.core = d.core_i;
    d.core.insert(d.core.end(), d.core_r.begin(), d.core_r.end());
    int base = a + b;
    for (int i = 0; i < ell; ++i) {
        auto bubble = random_bubble(sizes[static_cast<std::size_t>(i)], rng.next(), true);
        SpecialBubble sb;
        sb.anchor = slots[static_cast<std::size_t>(i)];
        sb.contact = base + bubble.cert.contact;
        for (auto [u, v] : bubble.graph.edges()) edges.emplace_back(base + u, base + v);
        edges.emplace_back(sb.anchor, sb.contact);
        for (int v = 0; v < bubble.graph.vertex_count(); ++v) sb.vertices.push_back(base + v);
        for (int v : bubble.cert.set_i) sb.set_i.push_back(base + v);
        for (int v : bubble.cert.set_r) sb.set_r.push_back(base + v);
        sb.edge_xy = {base + bubble.cert.edge_xy.first, base + bubble.cert.edge_xy.second};
        d.bubbles.push_back(std::move(sb));
        base += bubble.graph.vertex_count();
    }
    ComposedSpecial out{Graph::from_edges(base, edges), std::move(d)};
    auto bad = verify_special(out.graph, out.decomposition);
    if (!bad.empty())
        throw std::logic_error("compose_special: composed decomposition is invalid: " + bad[0]);
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of cubic graphs.

namespace detail {

// Backtracking over vertices in order; vertex u picks its still-missing
// neighbors among the later vertices.
inline void cubic_rec(int u, int n, std::vector<VertexList>& adj, std::vector<int>& deg,
                      const std::function<void(const Graph&)>& fn) {
    if (u == n) {
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v)
            for (int w : adj[static_cast<std::size_t>(v)])
                if (v < w) edges.emplace_back(v, w);
        fn(Graph::from_edges(n, edges));
        return;
    }
    const int need = 3 - deg[static_cast<std::size_t>(u)];
    if (need == 0) {
        cubic_rec(u + 1, n, adj, deg, fn);
        return;
    }
    VertexList cand;
    for (int v = u + 1; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] < 3) cand.push_back(v);
    if (static_cast<int>(cand.size()) < need) return;
    VertexList pick(static_cast<std::size_t>(need));
    std::function<void(int, int)> choose = [&](int idx, int from) {
        if (idx == need) {
            for (int w : pick) {
                adj[static_cast<std::size_t>(u)].push_back(w);
                adj[static_cast<std::size_t>(w)].push_back(u);
                ++deg[static_cast<std::size_t>(u)];
                ++deg[static_cast<std::size_t>(w)];
            }
            cubic_rec(u + 1, n, adj, deg, fn);
            for (int w : pick) {
                adj[static_cast<std::size_t>(u)].pop_back();
                adj[static_cast<std::size_t>(w)].pop_back();
                --deg[static_cast<std::size_t>(u)];
                --deg[static_cast<std::size_t>(w)];
            }
            return;
        }
        for (int i = from; i < static_cast<int>(cand.size()); ++i) {
            if (static_cast<int>(cand.size()) - i < need - idx) break;
            pick[static_cast<std::size_t>(idx)] = cand[static_cast<std::size_t>(i)];
            choose(idx + 1, i + 1);
        }
    };
    choose(0, 0);
}

}  // namespace detail

// Visits every labeled cubic graph on n vertices (connected or not)
// exactly once; returns how many were visited.
inline long long enumerate_cubic_labeled(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 0 || n % 2 != 0)
        throw std::invalid_argument("enumerate_cubic_labeled: order must be even");
    long long count = 0;
    std::vector<VertexList> adj(static_cast<std::size_t>(n));
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    detail::cubic_rec(0, n, adj, deg, [&](const Graph& g) {
        ++count;
        fn(g);
    });
    return count;
}

// ---------------------------------------------------------------------------
// Isomorphism testing (exact, for small graphs).

namespace detail {

inline std::vector<long long> iso_signature(const Graph& g) {
    const int n = g.vertex_count();
    // per-vertex invariant: (degree, triangles at v, sorted neighbor degrees)
    std::vector<long long> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        long long tri = 0;
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (g.has_edge(nb[i], nb[j])) ++tri;
        long long nd = 0;
        VertexList degs;
        for (int w : nb) degs.push_back(g.degree(w));
        std::sort(degs.begin(), degs.end());
        for (int dv : degs) nd = nd * 64 + dv;
        sig[static_cast<std::size_t>(v)] = (static_cast<long long>(g.degree(v)) << 40) +
                                           (tri << 20) + nd;
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

inline bool iso_backtrack(const Graph& a, const Graph& b, std::vector<int>& map_ab,
                          std::vector<int>& map_ba, int v) {
    const int n = a.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (map_ba[static_cast<std::size_t>(w)] != -1) continue;
        if (a.degree(v) != b.degree(w)) continue;
        bool ok = true;
        for (int x : a.neighbors(v)) {
            int mx = map_ab[static_cast<std::size_t>(x)];
            if (mx != -1 && !b.has_edge(w, mx)) {
                ok = false;
                break;
            }
        }
        if (ok)
            for (int y : b.neighbors(w)) {
                int my = map_ba[static_cast<std::size_t>(y)];
                if (my != -1 && !a.has_edge(v, my)) {
                    ok = false;
                    break;
                }
            }
        if (!ok) continue;
        map_ab[static_cast<std::size_t>(v)] = w;
        map_ba[static_cast<std::size_t>(w)] = v;
        if (iso_backtrack(a, b, map_ab, map_ba, v + 1)) return true;
        map_ab[static_cast<std::size_t>(v)] = -1;
        map_ba[static_cast<std::size_t>(w)] = -1;
    }
    return false;
}

}  // namespace detail

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (detail::iso_signature(a) != detail::iso_signature(b)) return false;
    std::vector<int> map_ab(static_cast<std::size_t>(a.vertex_count()), -1);
    std::vector<int> map_ba(static_cast<std::size_t>(a.vertex_count()), -1);
    return detail::iso_backtrack(a, b, map_ab, map_ba, 0);
}

namespace detail {

// Enumeration of connected cubic graphs up to isomorphism: restrict the
// labeled search to a canonical-ish form (vertex 0 adjacent to 1,2,3;
// every later vertex referenced before it is finalized; fresh vertices
// appear in increasing order), then deduplicate the survivors exactly.
inline void cubic_class_rec(int u, int n, int introduced, std::vector<VertexList>& adj,
                            std::vector<int>& deg, std::vector<Graph>& out) {
    if (u == n) {
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v)
            for (int w : adj[static_cast<std::size_t>(v)])
                if (v < w) edges.emplace_back(v, w);
        Graph g = Graph::from_edges(n, edges);
        for (const auto& seen : out)
            if (are_isomorphic(g, seen)) return;
        out.push_back(std::move(g));
        return;
    }
    if (u > introduced) return;  // u was never referenced: disconnected prefix
    const int need = 3 - deg[static_cast<std::size_t>(u)];
    if (need == 0) {
        cubic_class_rec(u + 1, n, introduced, adj, deg, out);
        return;
    }
    VertexList cand;
    for (int v = u + 1; v <= std::min(n - 1, introduced + need); ++v)
        if (deg[static_cast<std::size_t>(v)] < 3) cand.push_back(v);
    VertexList pick(static_cast<std::size_t>(need));
    std::function<void(int, int, int)> choose = [&](int idx, int from, int intro) {
        if (idx == need) {
            for (int w : pick) {
                adj[static_cast<std::size_t>(u)].push_back(w);
                adj[static_cast<std::size_t>(w)].push_back(u);
                ++deg[static_cast<std::size_t>(u)];
                ++deg[static_cast<std::size_t>(w)];
            }
            cubic_class_rec(u + 1, n, intro, adj, deg, out);
            for (int w : pick) {
                adj[static_cast<std::size_t>(u)].pop_back();
                adj[static_cast<std::size_t>(w)].pop_back();
                --deg[static_cast<std::size_t>(u)];
                --deg[static_cast<std::size_t>(w)];
            }
            return;
        }
        for (int i = from; i < static_cast<int>(cand.size()); ++i) {
            int w = cand[static_cast<std::size_t>(i)];
            if (w > intro + 1) break;  // fresh vertices must appear in order
            pick[static_cast<std::size_t>(idx)] = w;
            choose(idx + 1, i + 1, std::max(intro, w));
        }
    };
    choose(0, 0, introduced);
}

}  // namespace detail

// All connected cubic graphs on n vertices up to isomorphism.
inline std::vector<Graph> enumerate_cubic_classes(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("enumerate_cubic_classes: order must be even and at least 4");
    std::vector<Graph> out;
    std::vector<VertexList> adj(static_cast<std::size_t>(n));
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    // vertex 0 is wired to 1, 2, 3 up front
    for (int w : {1, 2, 3}) {
        adj[0].push_back(w);
        adj[static_cast<std::size_t>(w)].push_back(0);
        ++deg[0];
        ++deg[static_cast<std::size_t>(w)];
    }
    detail::cubic_class_rec(1, n, 3, adj, deg, out);
    return out;
}

}  // namespace egk
