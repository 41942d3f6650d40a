#pragma once

#include <optional>
#include <string>

#include "egk/bipartite.hpp"
#include "egk/blocks.hpp"
#include "egk/graph.hpp"
#include "egk/matching.hpp"
#include "egk/rng.hpp"

namespace egk {

// A bubble: a graph whose degree sequence is (3,...,3,2) with contact z
// the unique degree-2 vertex, whose vertices split into an independent
// set I and a rest R with z in R, such that R spans exactly one edge xy.
// Connectivity is not part of the definition.
struct BubbleCertificate {
    int contact = -1;   // z
    VertexList set_i;   // sorted
    VertexList set_r;   // sorted
    Edge edge_xy{-1, -1};  // (min, max)
};

struct BubbleCheck {
    bool ok = false;
    std::vector<std::string> violations;
};

// Checks every clause of the bubble definition, reporting all failures.
inline BubbleCheck verify_bubble(const Graph& g, const BubbleCertificate& cert) {
    BubbleCheck out;
    const int n = g.vertex_count();
    auto fail = [&out](const std::string& msg) { out.violations.push_back(msg); };

    int deg2 = 0, deg2_vertex = -1;
    bool degrees_ok = true;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 2) {
            ++deg2;
            deg2_vertex = v;
        } else if (d != 3) {
            degrees_ok = false;
        }
    }
    if (!degrees_ok || deg2 != 1)
        fail("degree profile: expected exactly one vertex of degree 2 and all others of degree 3");
    if (deg2 == 1 && cert.contact != deg2_vertex)
        fail("contact: certificate names " + std::to_string(cert.contact) +
             " but the degree-2 vertex is " + std::to_string(deg2_vertex));

    bool partition_ok = is_valid_vertex_set(g, cert.set_i) && is_valid_vertex_set(g, cert.set_r) &&
                        static_cast<int>(cert.set_i.size() + cert.set_r.size()) == n;
    if (partition_ok)
        for (int v : cert.set_i)
            if (std::binary_search(cert.set_r.begin(), cert.set_r.end(), v)) partition_ok = false;
    if (!partition_ok) {
        fail("partition: set_i and set_r do not partition the vertex set");
        out.ok = false;
        return out;  // remaining clauses would read junk sets
    }

    if (!std::binary_search(cert.set_r.begin(), cert.set_r.end(), cert.contact))
        fail("contact: not a member of set_r");

    bool independent = true;
    for (int v : cert.set_i)
        for (int w : g.neighbors(v))
            if (w > v && std::binary_search(cert.set_i.begin(), cert.set_i.end(), w)) independent = false;
    if (!independent) fail("independence: set_i spans an edge");

    std::vector<Edge> internal;
    for (int v : cert.set_r)
        for (int w : g.neighbors(v))
            if (w > v && std::binary_search(cert.set_r.begin(), cert.set_r.end(), w))
                internal.emplace_back(v, w);
    if (internal.size() != 1)
        fail("edge-xy: set_r spans " + std::to_string(internal.size()) + " edges, expected exactly 1");
    else if (internal[0] != cert.edge_xy)
        fail("edge-xy: certificate edge does not match the unique set_r edge");

    out.ok = out.violations.empty();
    return out;
}

inline bool is_bubble_certificate(const Graph& g, const BubbleCertificate& cert) {
    return verify_bubble(g, cert).ok;
}

// Recognizes whether g is a bubble and, if so, produces a verified
// certificate. Strategy: the edge xy is the only edge inside R, so g - xy
// must be bipartite with x, y and the contact all on the R side; xy is
// never a bridge of a bubble, so bridges are skipped outright. Candidate
// edges are tried in increasing order; in graphs with several components
// the 2-coloring of components away from xy and the contact is free, and
// each such component puts the side with its smallest vertex into R.
inline std::optional<BubbleCertificate> recognize_bubble(const Graph& g) {
    const int n = g.vertex_count();
    int z = -1, deg2 = 0;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 2) {
            ++deg2;
            z = v;
        } else if (d != 3) {
            return std::nullopt;
        }
    }
    if (deg2 != 1) return std::nullopt;

    auto bridge_set = bridges(g);
    for (const auto& [x, y] : g.edges()) {
        if (std::binary_search(bridge_set.begin(), bridge_set.end(), Edge{x, y})) continue;
        Graph h = g.without_edge(x, y);
        auto bip = try_bipartition(h);
        if (!bip) continue;
        // side[v] = 0 for side_a, 1 for side_b of each component
        std::vector<int> side(static_cast<std::size_t>(n), 0);
        for (int v : bip->side_b) side[static_cast<std::size_t>(v)] = 1;
        auto comps = connected_components(h);
        std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (int v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        if (comp_of[static_cast<std::size_t>(x)] != comp_of[static_cast<std::size_t>(y)])
            continue;  // xy was a bridge of some component-internal structure; cannot happen
        if (side[static_cast<std::size_t>(x)] != side[static_cast<std::size_t>(y)]) continue;
        // Orient every component: R takes x's side in x's component, z's
        // side in z's component, and the side of the smallest vertex
        // (side_a) elsewhere.
        std::vector<int> r_side(comps.size(), 0);
        r_side[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(x)])] =
            side[static_cast<std::size_t>(x)];
        if (comp_of[static_cast<std::size_t>(z)] != comp_of[static_cast<std::size_t>(x)])
            r_side[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(z)])] =
                side[static_cast<std::size_t>(z)];
        else if (side[static_cast<std::size_t>(z)] != side[static_cast<std::size_t>(x)])
            continue;  // z must sit on the R side with x and y
        BubbleCertificate cert;
        cert.contact = z;
        cert.edge_xy = {x, y};
        for (int v = 0; v < n; ++v) {
            bool in_r = side[static_cast<std::size_t>(v)] ==
                        r_side[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(v)])];
            (in_r ? cert.set_r : cert.set_i).push_back(v);
        }
        if (!verify_bubble(g, cert).ok)
            throw std::logic_error("recognize_bubble: constructed certificate failed verification");
        return cert;
    }
    return std::nullopt;
}

// Matching of g - avoid that saturates set_i, where avoid is the contact
// or an endpoint of xy. Existence is guaranteed for valid bubbles (Hall's
// condition holds by degree counting), so failure throws.
inline Matching bubble_matching_avoiding(const Graph& g, const BubbleCertificate& cert, int avoid) {
    if (!verify_bubble(g, cert).ok)
        throw std::invalid_argument("bubble_matching_avoiding: invalid bubble certificate");
    if (avoid != cert.contact && avoid != cert.edge_xy.first && avoid != cert.edge_xy.second)
        throw std::invalid_argument(
            "bubble_matching_avoiding: avoid must be the contact or an xy endpoint");
    // Bipartite subgraph: set_i vs set_r \ {avoid}, crossing edges only
    // (dropping xy, and all edges at avoid, keeps exactly the I-R edges).
    std::vector<Edge> cross;
    for (int v : cert.set_i)
        for (int w : g.neighbors(v))
            if (w != avoid) cross.emplace_back(std::min(v, w), std::max(v, w));
    std::sort(cross.begin(), cross.end());
    cross.erase(std::unique(cross.begin(), cross.end()), cross.end());
    Graph h = Graph::from_edges(g.vertex_count(), cross);
    Bipartition bip;
    bip.side_a = cert.set_i;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!std::binary_search(cert.set_i.begin(), cert.set_i.end(), v)) bip.side_b.push_back(v);
    auto res = saturating_matching(h, bip, Side::a);
    auto* m = std::get_if<Matching>(&res);
    if (m == nullptr)
        throw std::logic_error("bubble_matching_avoiding: Hall condition failed on a valid bubble");
    if (!verify_matching(g, *m))
        throw std::logic_error("bubble_matching_avoiding: produced a non-matching");
    for (const auto& [u, v] : m->edges)
        if (u == avoid || v == avoid)
            throw std::logic_error("bubble_matching_avoiding: matching touches the avoided vertex");
    return *m;
}

// One extraction step towards a 2-connected sub-bubble. For a valid
// bubble that is not 2-connected this always succeeds: if g is
// disconnected, the component holding xy (which provably also holds the
// contact) is itself a bubble; otherwise some bridge uv with u in R
// exists, and the bridge side holding u (which provably holds xy but not
// the contact) is a bubble with new contact u. Returns nullopt iff g is
// 2-connected.
struct SubBubble {
    VertexList vertices;     // global ids, sorted
    Graph graph;             // induced subgraph, local ids
    BubbleCertificate cert;  // certificate in local ids
};

inline std::optional<SubBubble> extract_sub_bubble(const Graph& g, const BubbleCertificate& cert) {
    if (!verify_bubble(g, cert).ok)
        throw std::invalid_argument("extract_sub_bubble: invalid bubble certificate");

    VertexList chosen;
    int new_contact = -1;  // global id
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        for (const auto& c : comps)
            if (std::binary_search(c.begin(), c.end(), cert.edge_xy.first)) chosen = c;
        new_contact = cert.contact;
    } else {
        auto bs = bridges(g);
        if (bs.empty()) return std::nullopt;  // connected and bridgeless => 2-connected here
        auto [a, b] = bs.front();
        // orient the bridge: u is the R endpoint
        int u = std::binary_search(cert.set_r.begin(), cert.set_r.end(), a) ? a : b;
        auto sides = connected_components(g.without_edge(a, b));
        for (const auto& c : sides)
            if (std::binary_search(c.begin(), c.end(), u)) chosen = c;
        new_contact = u;
    }

    SubBubble out;
    auto sub = induced_subgraph(g, chosen);
    out.vertices = std::move(chosen);
    out.graph = std::move(sub.graph);
    out.cert.contact = sub.to_new[static_cast<std::size_t>(new_contact)];
    out.cert.edge_xy = {sub.to_new[static_cast<std::size_t>(cert.edge_xy.first)],
                        sub.to_new[static_cast<std::size_t>(cert.edge_xy.second)]};
    if (out.cert.edge_xy.first > out.cert.edge_xy.second)
        std::swap(out.cert.edge_xy.first, out.cert.edge_xy.second);
    for (int v : cert.set_i) {
        int w = sub.to_new[static_cast<std::size_t>(v)];
        if (w != -1) out.cert.set_i.push_back(w);
    }
    for (int v : cert.set_r) {
        int w = sub.to_new[static_cast<std::size_t>(v)];
        if (w != -1) out.cert.set_r.push_back(w);
    }
    if (!verify_bubble(out.graph, out.cert).ok)
        throw std::logic_error("extract_sub_bubble: extracted subgraph is not a bubble");
    return out;
}

// ---------------------------------------------------------------------------
// Catalog and generators.

struct BubbleExample {
    Graph graph;
    BubbleCertificate cert;
};

inline std::vector<std::string> bubble_catalog_ids() { return {"b5", "b7", "b9", "b11"}; }

// Four hand-built bubbles: b5 is the subdivided K4 (smallest bubble), b7
// has its contact on the xy edge, b9 is 2-connected with contact off the
// edge, b11 is a b5 hanging from a bridge inside a 6-vertex shell (the
// smallest catalog member that is not 2-connected).
inline BubbleExample bubble_catalog(const std::string& id) {
    BubbleExample e;
    if (id == "b5") {
        e.graph = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
        e.cert = {0, {1, 2}, {0, 3, 4}, {3, 4}};
    } else if (id == "b7") {
        e.graph = Graph::from_edges(
            7, {{0, 1}, {0, 3}, {2, 3}, {1, 2}, {1, 4}, {4, 6}, {5, 6}, {0, 5}, {2, 5}, {3, 4}});
        e.cert = {6, {0, 2, 4}, {1, 3, 5, 6}, {5, 6}};
    } else if (id == "b9") {
        e.graph = Graph::from_edges(9, {{5, 7}, {1, 7}, {1, 4}, {2, 4}, {0, 2}, {0, 6}, {3, 6},
                                        {3, 8}, {5, 8}, {5, 6}, {0, 7}, {1, 2}, {3, 4}});
        e.cert = {8, {0, 1, 3, 5}, {2, 4, 6, 7, 8}, {2, 4}};
    } else if (id == "b11") {
        e.graph = Graph::from_edges(11, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                                         {0, 5}, {5, 7}, {5, 9}, {6, 7}, {7, 8}, {8, 9}, {6, 9},
                                         {6, 10}, {8, 10}});
        e.cert = {10, {1, 2, 5, 6, 8}, {0, 3, 4, 7, 9, 10}, {3, 4}};
    } else {
        throw std::invalid_argument("bubble_catalog: unknown id '" + id + "'");
    }
    if (!verify_bubble(e.graph, e.cert).ok)
        throw std::logic_error("bubble_catalog: catalog entry failed verification");
    return e;
}

namespace detail {

// Stub-matching construction: I vertices carry 3 stubs each, R vertices
// carry capacity 3 except the specials (contact 2, xy endpoints 2), and a
// random bijection between stubs and capacity slots is retried until the
// bipartite graph is simple.
inline std::optional<Graph> try_stub_bubble(int n, bool contact_on_edge, Rng& rng,
                                            BubbleCertificate& cert) {
    const int ni = (n - 1) / 2;
    // vertices 0..ni-1 are I, ni..n-1 are R; specials fixed for determinism
    const int z = ni, x = contact_on_edge ? z : ni + 1, y = contact_on_edge ? ni + 1 : ni + 2;
    std::vector<int> cap(static_cast<std::size_t>(n), 3);
    cap[static_cast<std::size_t>(z)] = 2;
    cap[static_cast<std::size_t>(x)] -= 1;
    cap[static_cast<std::size_t>(y)] -= 1;
    std::vector<int> slots;
    for (int v = ni; v < n; ++v)
        for (int s = 0; s < cap[static_cast<std::size_t>(v)]; ++s) slots.push_back(v);
    if (static_cast<int>(slots.size()) != 3 * ni) return std::nullopt;  // n even or too small
    rng.shuffle(slots);
    std::vector<Edge> edges;
    std::size_t at = 0;
    for (int v = 0; v < ni; ++v) {
        int a = slots[at], b = slots[at + 1], c = slots[at + 2];
        at += 3;
        if (a == b || a == c || b == c) return std::nullopt;  // parallel edges
        edges.emplace_back(v, a);
        edges.emplace_back(v, b);
        edges.emplace_back(v, c);
    }
    edges.emplace_back(x, y);
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return std::nullopt;
    cert.contact = z;
    cert.edge_xy = {std::min(x, y), std::max(x, y)};
    cert.set_i.clear();
    cert.set_r.clear();
    for (int v = 0; v < ni; ++v) cert.set_i.push_back(v);
    for (int v = ni; v < n; ++v) cert.set_r.push_back(v);
    return Graph::from_edges(n, edges);
}

}  // namespace detail

// Random bubble on n vertices (n odd, n >= 5), optionally required to be
// 2-connected. Deterministic in the seed.
inline BubbleExample random_bubble(int n, std::uint64_t seed, bool require_two_connected = true) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("random_bubble: order must be odd and at least 5");
    Rng rng(seed);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        bool on_edge = n >= 7 && rng.chance(1, 4);
        BubbleExample e;
        auto g = detail::try_stub_bubble(n, on_edge, rng, e.cert);
        if (!g) continue;
        e.graph = std::move(*g);
        if (!verify_bubble(e.graph, e.cert).ok)
            throw std::logic_error("random_bubble: generated graph failed verification");
        if (require_two_connected && !is_two_connected(e.graph)) continue;
        return e;
    }
    throw std::runtime_error("random_bubble: exhausted attempts for n=" + std::to_string(n));
}

// Bubble with a bridge: an inner random bubble whose contact is bridged
// into a (shell_pairs + shell_pairs)-vertex shell carrying the new
// contact. Always fails is_two_connected; exercises extraction.
inline BubbleExample nested_bubble(int inner_n, int shell_pairs, std::uint64_t seed) {
    if (shell_pairs < 3) throw std::invalid_argument("nested_bubble: need at least 3 shell pairs");
    BubbleExample inner = random_bubble(inner_n, seed * 2 + 1, true);
    Rng rng(seed);
    const int base = inner.graph.vertex_count();
    const int t = shell_pairs;
    // shell: I-side base..base+t-1 (first one bridges to the inner contact
    // and has 2 shell stubs), R-side base+t..base+2t-1 (last one is the new
    // contact with 2 stubs)
    const int bridge_i = base, new_z = base + 2 * t - 1;
    for (int attempt = 0; attempt < 20000; ++attempt) {
        std::vector<int> slots;
        for (int v = base + t; v < base + 2 * t; ++v)
            for (int s = 0; s < (v == new_z ? 2 : 3); ++s) slots.push_back(v);
        rng.shuffle(slots);
        std::vector<Edge> edges = inner.graph.edges();
        edges.emplace_back(inner.cert.contact, bridge_i);
        bool ok = true;
        std::size_t at = 0;
        for (int v = base; v < base + t && ok; ++v) {
            int want = v == bridge_i ? 2 : 3;
            std::vector<int> picks(slots.begin() + static_cast<long>(at),
                                   slots.begin() + static_cast<long>(at + static_cast<std::size_t>(want)));
            at += static_cast<std::size_t>(want);
            std::sort(picks.begin(), picks.end());
            if (std::adjacent_find(picks.begin(), picks.end()) != picks.end()) ok = false;
            for (int w : picks) edges.emplace_back(v, w);
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        Graph g = Graph::from_edges(base + 2 * t, edges);
        BubbleExample e;
        e.graph = g;
        e.cert.contact = new_z;
        e.cert.edge_xy = inner.cert.edge_xy;
        e.cert.set_i = inner.cert.set_i;
        for (int v = base; v < base + t; ++v) e.cert.set_i.push_back(v);
        e.cert.set_r = inner.cert.set_r;
        for (int v = base + t; v < base + 2 * t; ++v) e.cert.set_r.push_back(v);
        if (!verify_bubble(e.graph, e.cert).ok) continue;  // shell may have missed a degree
        if (!is_connected(e.graph)) continue;
        if (is_two_connected(e.graph))
            throw std::logic_error("nested_bubble: bridge construction came out 2-connected");
        return e;
    }
    throw std::runtime_error("nested_bubble: exhausted attempts");
}

}  // namespace egk
