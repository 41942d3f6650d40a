#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "egk/graph.hpp"
#include "egk/matching.hpp"

namespace egk {

// Raised when an exact oracle is asked for a graph beyond its size limit.
class OracleScaleError : public std::runtime_error {
public:
    OracleScaleError(const std::string& oracle, int n, int limit)
        : std::runtime_error(oracle + ": graph has " + std::to_string(n) +
                             " vertices, exceeds oracle limit " + std::to_string(limit)) {}
};

// Raised when a cancellation flag is set mid-search.
class OracleCancelled : public std::runtime_error {
public:
    OracleCancelled() : std::runtime_error("oracle cancelled") {}
};

inline bool verify_independent(const Graph& g, const VertexList& set) {
    if (!is_valid_vertex_set(g, sorted_copy(set))) return false;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.has_edge(set[i], set[j])) return false;
    return true;
}

namespace detail {

struct AlphaSearch {
    const std::atomic<bool>* cancel;
    std::vector<std::uint64_t> nbr;
    int best = 0;
    std::uint64_t best_set = 0;
    long long nodes = 0;

    // Greedy clique cover of the subgraph on `live`: its size bounds the
    // independence number from above.
    int clique_cover_bound(std::uint64_t live) const {
        std::uint64_t cliques[64];
        int k = 0;
        for (std::uint64_t rest = live; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            bool placed = false;
            for (int i = 0; i < k; ++i)
                if ((cliques[i] & ~nbr[static_cast<std::size_t>(v)]) == 0) {
                    cliques[i] |= std::uint64_t{1} << v;
                    placed = true;
                    break;
                }
            if (!placed) cliques[k++] = std::uint64_t{1} << v;
        }
        return k;
    }

    void run(std::uint64_t live, std::uint64_t chosen, int count) {
        ++nodes;
        if (cancel && cancel->load(std::memory_order_relaxed)) throw OracleCancelled();
        // Degree-0 and degree-1 reductions are always safe to apply.
        for (bool again = true; again;) {
            again = false;
            for (std::uint64_t rest = live; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                std::uint64_t nv = nbr[static_cast<std::size_t>(v)] & live;
                int d = std::popcount(nv);
                if (d == 0) {
                    live &= ~(std::uint64_t{1} << v);
                    chosen |= std::uint64_t{1} << v;
                    ++count;
                    again = true;
                } else if (d == 1) {
                    live &= ~((std::uint64_t{1} << v) | nv);
                    chosen |= std::uint64_t{1} << v;
                    ++count;
                    again = true;
                    break;  // neighbourhood changed, restart the scan
                }
            }
        }
        if (live == 0) {
            if (count > best) {
                best = count;
                best_set = chosen;
            }
            return;
        }
        if (count + clique_cover_bound(live) <= best) return;
        // Branch on a maximum-degree vertex (smallest id among ties).
        int pick = -1, pick_deg = -1;
        for (std::uint64_t rest = live; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int d = std::popcount(nbr[static_cast<std::size_t>(v)] & live);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        std::uint64_t bit = std::uint64_t{1} << pick;
        run(live & ~(bit | nbr[static_cast<std::size_t>(pick)]), chosen | bit, count + 1);
        run(live & ~bit, chosen, count);
    }
};

}  // namespace detail

struct AlphaResult {
    int size = 0;
    VertexList set;  // one maximum independent set, sorted
};

// Exact maximum independent set by branch and bound with degree
// reductions and a clique-cover upper bound. Deterministic. The returned
// set is re-verified (and its complement checked as a vertex cover) on
// every call.
inline AlphaResult alpha_exact(const Graph& g, int limit = 40, const std::atomic<bool>* cancel = nullptr) {
    const int n = g.vertex_count();
    if (limit > 63) limit = 63;
    if (n > limit) throw OracleScaleError("alpha_exact", n, limit);
    detail::AlphaSearch s;
    s.cancel = cancel;
    s.nbr.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        s.nbr[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        s.nbr[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    s.run(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0, 0);
    AlphaResult r;
    r.size = s.best;
    for (int v = 0; v < n; ++v)
        if ((s.best_set >> v) & 1) r.set.push_back(v);
    if (static_cast<int>(r.set.size()) != r.size || !verify_independent(g, r.set))
        throw std::logic_error("alpha_exact: internal error, candidate set not independent");
    VertexCover complement;
    for (int v = 0; v < n; ++v)
        if (!((s.best_set >> v) & 1)) complement.vertices.push_back(v);
    if (!is_vertex_cover(g, complement))
        throw std::logic_error("alpha_exact: internal error, complement is not a vertex cover");
    return r;
}

inline int independence_number(const Graph& g, int limit = 40,
                               const std::atomic<bool>* cancel = nullptr) {
    return alpha_exact(g, limit, cancel).size;
}

// Independent oracle for cross-checks: plain subset enumeration.
inline int alpha_by_enumeration(const Graph& g, int limit = 20) {
    const int n = g.vertex_count();
    if (n > limit || limit > 24) throw OracleScaleError("alpha_by_enumeration", n, std::min(limit, 24));
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        nbr[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        nbr[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    }
    int best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
        bool ok = true;
        for (std::uint32_t rest = s; ok && rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (nbr[static_cast<std::size_t>(v)] & s) ok = false;
        }
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

namespace detail {

// Memoized recursion on vertex subsets: mu(S) considers the lowest vertex
// v of S and either skips it or matches it with each live neighbour.
struct MuSearch {
    std::vector<std::uint32_t> nbr;
    std::vector<std::int8_t> dense;              // used when n <= 20
    std::unordered_map<std::uint32_t, int> sparse;  // used when 20 < n <= 24
    bool use_dense = false;

    int run(std::uint32_t s) {
        if (s == 0) return 0;
        if (use_dense) {
            if (dense[s] >= 0) return dense[s];
        } else if (auto it = sparse.find(s); it != sparse.end()) {
            return it->second;
        }
        int v = std::countr_zero(s);
        std::uint32_t without_v = s & (s - 1);
        int best = run(without_v);
        for (std::uint32_t live = nbr[static_cast<std::size_t>(v)] & s; live;) {
            int u = std::countr_zero(live);
            live &= live - 1;
            best = std::max(best, 1 + run(without_v & ~(std::uint32_t{1} << u)));
        }
        if (use_dense)
            dense[s] = static_cast<std::int8_t>(best);
        else
            sparse.emplace(s, best);
        return best;
    }
};

}  // namespace detail

// Exact matching number by exhaustive memoized recursion; independent of
// the blossom implementation, intended for cross-checks.
inline int mu_exact(const Graph& g, int limit = 24) {
    const int n = g.vertex_count();
    if (limit > 24) limit = 24;
    if (n > limit) throw OracleScaleError("mu_exact", n, limit);
    detail::MuSearch s;
    s.nbr.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        s.nbr[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        s.nbr[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    }
    s.use_dense = n <= 20;
    if (s.use_dense) s.dense.assign(std::size_t{1} << n, -1);
    return s.run(n == 0 ? 0 : (std::uint32_t{1} << n) - 1);
}

}  // namespace egk
