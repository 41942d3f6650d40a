// Acceptance gate: eight independent checks, one PASS/FAIL line each.
// Exits nonzero if any check fails. Each check rebuilds its own corpus
// from fixed seeds, so the binary is deterministic end to end.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "egk/blocks.hpp"
#include "egk/bubble.hpp"
#include "egk/edgelist.hpp"
#include "egk/exact.hpp"
#include "egk/generate.hpp"
#include "egk/graph.hpp"
#include "egk/graph6.hpp"
#include "egk/matching.hpp"
#include "egk/recognize.hpp"
#include "egk/rng.hpp"
#include "util.hpp"

namespace {

using namespace egk;

struct Outcome {
    bool pass = false;
    std::string detail;
};

// G(n, p) with p drawn from {20, 35, 50, 65, 80} percent.
Graph random_graph(int n, Rng& rng) {
    const int p = 20 + 15 * rng.below(5);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p, 100)) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

// All graphs on n <= 7 vertices by edge-subset enumeration; fn receives
// each graph (connected or not). Returns how many graphs were visited.
template <typename Fn>
long long for_each_small_graph(Fn fn) {
    long long visited = 0;
    for (int n = 1; n <= 7; ++n) {
        std::vector<Edge> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
        const int m = static_cast<int>(all.size());
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
            std::vector<Edge> es;
            for (int i = 0; i < m; ++i)
                if ((mask >> i) & 1) es.push_back(all[static_cast<std::size_t>(i)]);
            fn(Graph::from_edges(n, es));
            ++visited;
        }
    }
    return visited;
}

// The random corpus shared by the first two checks: 10^4 seeded graphs
// on 4..16 vertices.
template <typename Fn>
void for_each_random_graph(Fn fn) {
    for (std::uint64_t s = 0; s < 10000; ++s) {
        Rng rng(1000000 + s);
        const int n = 4 + rng.below(13);
        fn(random_graph(n, rng));
    }
}

// Valid composition shapes (saturated-core-side size, bubble count) and a
// seeded size assignment; used by the witness and round-trip checks.
ComposeSpec composed_spec(int i) {
    static const std::array<std::pair<int, int>, 10> shapes = {{{0, 3},
                                                                {1, 6},
                                                                {2, 3},
                                                                {2, 6},
                                                                {3, 0},
                                                                {3, 3},
                                                                {3, 9},
                                                                {4, 6},
                                                                {5, 3},
                                                                {6, 0}}};
    const auto [core_high, ell] = shapes[static_cast<std::size_t>(i) % shapes.size()];
    ComposeSpec spec;
    spec.core_high = core_high;
    spec.ell = ell;
    spec.seed = 5000 + static_cast<std::uint64_t>(i);
    Rng r(777 + static_cast<std::uint64_t>(i));
    for (int j = 0; j < ell; ++j) spec.bubble_sizes.push_back(5 + 2 * r.below(3));
    return spec;
}

bool oracle_tight(const Graph& g) {
    auto prof = degree_profile(g);
    return static_cast<long long>(prof.min_degree) * independence_number(g) ==
           static_cast<long long>(prof.max_degree) * matching_number(g);
}

// --------------------------------------------------------------------------
// 1. The product bound min_degree*alpha <= max_degree*mu, integer-exact,
//    on every connected graph of order <= 7 and on 10^4 random graphs.

Outcome criterion_1() {
    long long connected = 0, violations = 0;
    auto check = [&violations](const Graph& g) {
        auto prof = degree_profile(g);
        const long long lhs =
            static_cast<long long>(prof.min_degree) * independence_number(g);
        const long long rhs = static_cast<long long>(prof.max_degree) * matching_number(g);
        if (lhs > rhs) ++violations;
    };
    const long long visited = for_each_small_graph([&](const Graph& g) {
        if (!is_connected(g)) return;
        ++connected;
        check(g);
    });
    long long randoms = 0;
    for_each_random_graph([&](const Graph& g) {
        ++randoms;
        check(g);
    });
    const bool pass =
        violations == 0 && visited == 2131019 && connected == 1893732 && randoms == 10000;
    std::ostringstream d;
    d << "violations=" << violations << " over " << connected
      << " connected graphs of order<=7 (" << visited << " enumerated) and " << randoms
      << " random graphs of order<=16";
    return {pass, d.str()};
}

// --------------------------------------------------------------------------
// 2. For min degree < max degree, equality holds exactly on the graphs the
//    biregular recognizer accepts (same corpus as check 1).

Outcome criterion_2() {
    long long considered = 0, equal_count = 0, mismatches = 0, bad_certs = 0;
    auto check = [&](const Graph& g) {
        auto prof = degree_profile(g);
        if (prof.min_degree >= prof.max_degree) return;
        ++considered;
        const bool equal = oracle_tight(g);
        if (equal) ++equal_count;
        auto out = recognize_biregular_extremal(g);
        const bool recognized = out.certificate.has_value();
        if (recognized && !verify_biregular(g, *out.certificate)) ++bad_certs;
        if (equal != recognized) ++mismatches;
    };
    for_each_small_graph([&](const Graph& g) {
        if (is_connected(g)) check(g);
    });
    for_each_random_graph(check);
    const bool pass = mismatches == 0 && bad_certs == 0 && considered > 0;
    std::ostringstream d;
    d << "mismatches=" << mismatches << " bad_certificates=" << bad_certs << " over "
      << considered << " graphs with min<max degree (" << equal_count << " attained equality)";
    return {pass, d.str()};
}

// --------------------------------------------------------------------------
// 3. Cubic graphs: alpha == mu exactly on the graphs that decompose into a
//    bipartite core plus bridged bubbles. Exhaustive labeled enumeration up
//    to order 10 and isomorphism classes up to order 12.

Outcome criterion_3() {
    const std::array<int, 5> orders = {4, 6, 8, 10, 12};
    const std::array<long long, 5> expect_classes = {1, 2, 5, 19, 85};
    long long class_total = 0, class_mismatches = 0, bad_counts = 0, bad_certs = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        auto classes = enumerate_cubic_classes(orders[i]);
        if (static_cast<long long>(classes.size()) != expect_classes[i]) ++bad_counts;
        for (const auto& g : classes) {
            ++class_total;
            auto out = recognize_special(g);
            const bool recognized = out.decomposition.has_value();
            if (recognized && !verify_special(g, *out.decomposition).empty()) ++bad_certs;
            if (recognized != oracle_tight(g)) ++class_mismatches;
        }
    }

    const std::array<int, 4> lab_orders = {4, 6, 8, 10};
    const std::array<long long, 4> expect_total = {1, 70, 19355, 11180820};
    const std::array<long long, 4> expect_connected = {1, 70, 19320, 11166120};
    const std::array<long long, 4> expect_tight = {0, 10, 840, 257040};
    long long lab_mismatches = 0;
    for (std::size_t i = 0; i < lab_orders.size(); ++i) {
        long long connected = 0, tight = 0;
        const long long total = enumerate_cubic_labeled(lab_orders[i], [&](const Graph& g) {
            if (is_connected(g)) ++connected;
            const bool structural = is_extremal(g).verdict == Verdict::tight;
            if (structural != oracle_tight(g)) ++lab_mismatches;
            if (structural) ++tight;
        });
        if (total != expect_total[i] || connected != expect_connected[i] ||
            tight != expect_tight[i])
            ++bad_counts;
    }

    const bool pass =
        class_mismatches == 0 && lab_mismatches == 0 && bad_counts == 0 && bad_certs == 0;
    std::ostringstream d;
    d << "class_mismatches=" << class_mismatches << " labeled_mismatches=" << lab_mismatches
      << " count_failures=" << bad_counts << " bad_certificates=" << bad_certs << " over "
      << class_total << " classes (order<=12) and 11.2M labeled cubic graphs (order<=10)";
    return {pass, d.str()};
}

// --------------------------------------------------------------------------
// 4. Every recognized decomposition yields a verified equal-size
//    independent-set/matching witness pair matching the matching number.

Outcome criterion_4() {
    long long checked = 0, failures = 0;
    auto witness_ok = [&](const Graph& g, const SpecialDecomposition& d) {
        ++checked;
        try {
            WitnessPair w = build_witnesses(g, d);
            if (!verify_witness_pair(g, w)) return false;
            if (static_cast<int>(w.independent.size()) != w.matching.size()) return false;
            if (w.matching.size() != matching_number(g)) return false;
            return true;
        } catch (const std::exception&) {
            return false;
        }
    };
    auto on_connected_cubic = [&](const Graph& g) {
        auto out = recognize_special(g);
        if (out.decomposition && !witness_ok(g, *out.decomposition)) ++failures;
    };

    for (int n : {4, 6, 8, 10, 12}) {
        for (const auto& g : enumerate_cubic_classes(n)) on_connected_cubic(g);
    }
    for (int n : {4, 6, 8, 10}) {
        enumerate_cubic_labeled(n, [&](const Graph& g) {
            if (is_connected(g)) on_connected_cubic(g);
        });
    }
    long long composed = 0;
    for (int i = 0; i < 1000; ++i) {
        auto cs = compose_special(composed_spec(i));
        ++composed;
        if (!witness_ok(cs.graph, cs.decomposition)) ++failures;
    }

    const bool pass = failures == 0 && composed == 1000 && checked > 250000;
    std::ostringstream d;
    d << "failures=" << failures << " over " << checked
      << " decomposed graphs (enumerated corpora plus " << composed << " composed)";
    return {pass, d.str()};
}

// --------------------------------------------------------------------------
// 5. Bubble invariants: alpha(B) = alpha(B-z) = mu(B) = mu(B-z) = (n-1)/2,
//    matchings that avoid x, y, or z, and sub-bubble extraction from
//    bridged bubbles.

Outcome criterion_5() {
    std::vector<BubbleExample> bubbles;
    for (const auto& id : bubble_catalog_ids()) bubbles.push_back(bubble_catalog(id));
    for (int n = 5; n <= 21; n += 2)
        for (std::uint64_t s = 0; s < 6; ++s)
            bubbles.push_back(random_bubble(n, 900 + s, false));
    const std::array<std::pair<int, int>, 10> nested = {{{5, 3},
                                                         {7, 3},
                                                         {5, 4},
                                                         {9, 3},
                                                         {7, 5},
                                                         {5, 8},
                                                         {9, 6},
                                                         {11, 5},
                                                         {13, 4},
                                                         {15, 3}}};
    for (std::size_t i = 0; i < nested.size(); ++i)
        bubbles.push_back(
            nested_bubble(nested[i].first, nested[i].second, 40 + static_cast<std::uint64_t>(i)));

    long long checked = 0, failures = 0, bridged = 0;
    for (const auto& e : bubbles) {
        ++checked;
        const Graph& b = e.graph;
        const int n = b.vertex_count();
        const int half = (n - 1) / 2;
        bool ok = n <= 21 && n % 2 == 1;
        ok = ok && is_bubble_certificate(b, e.cert);
        ok = ok && independence_number(b) == half;
        ok = ok && matching_number(b) == half && mu_exact(b) == half;
        Graph bz = b.without_vertex(e.cert.contact);
        ok = ok && independence_number(bz) == half && matching_number(bz) == half;
        for (int avoid : {e.cert.edge_xy.first, e.cert.edge_xy.second, e.cert.contact}) {
            Matching m = bubble_matching_avoiding(b, e.cert, avoid);
            bool covered = false;
            for (const auto& [u, v] : m.edges)
                if (u == avoid || v == avoid) covered = true;
            ok = ok && verify_matching(b, m) && m.size() == half && !covered;
        }
        if (!is_two_connected(b)) {
            ++bridged;
            auto sub = extract_sub_bubble(b, e.cert);
            ok = ok && sub.has_value() && is_bubble_certificate(sub->graph, sub->cert);
        }
        if (!ok) ++failures;
    }
    const bool pass = failures == 0 && bridged >= 10 && checked > 60;
    std::ostringstream d;
    d << "failures=" << failures << " over " << checked << " bubbles (" << bridged
      << " bridged, each yielding a verified sub-bubble)";
    return {pass, d.str()};
}

// --------------------------------------------------------------------------
// 6. Known values: every cycle is tight; the star K_{1,3} is tight with a
//    biregular certificate; a composed 22-vertex cubic graph attains
//    alpha = mu = 10 and is recognized.

Outcome criterion_6() {
    long long failures = 0;
    for (int n = 3; n <= 20; ++n)
        if (!check_inequality(testutil::cycle(n)).tight) ++failures;

    auto star = is_extremal(testutil::star(3));
    if (!(star.verdict == Verdict::tight && star.biregular &&
          verify_biregular(testutil::star(3), *star.biregular)))
        ++failures;

    ComposeSpec spec;
    spec.core_high = 2;
    spec.ell = 3;
    spec.bubble_sizes = {5, 5, 7};
    spec.seed = 1;
    auto cs = compose_special(spec);
    const bool value_ok = cs.graph.vertex_count() == 22 &&
                          independence_number(cs.graph) == 10 &&
                          matching_number(cs.graph) == 10 &&
                          recognize_special(cs.graph).decomposition.has_value();
    if (!value_ok) ++failures;

    const bool pass = failures == 0;
    std::ostringstream d;
    d << "failures=" << failures
      << " (cycles C3..C20 tight; K_{1,3} tight via biregular certificate; 22-vertex composed "
         "graph has alpha=mu=10)";
    return {pass, d.str()};
}

// --------------------------------------------------------------------------
// 7. Round trips: graph6 parse/serialize is byte-exact on the fixture
//    corpus; composition -> recognition recovers the bubble count and the
//    bubble vertex-set partition.

Outcome criterion_7() {
    long long cases = 0, failures = 0;
    {
        std::ifstream f(std::string(EGK_FIXTURE_DIR) + "/g6_cases.json");
        if (!f) return {false, "fixture corpus g6_cases.json not found"};
        nlohmann::json doc = nlohmann::json::parse(f);
        for (const auto& c : doc) {
            ++cases;
            const std::string g6 = c.at("g6").get<std::string>();
            Graph g = parse_graph6(g6);
            bool ok = g.vertex_count() == c.at("n").get<int>();
            std::vector<Edge> edges;
            for (const auto& e : c.at("edges")) {
                const int u = e.at(0).get<int>(), v = e.at(1).get<int>();
                edges.emplace_back(std::min(u, v), std::max(u, v));
            }
            std::sort(edges.begin(), edges.end());
            ok = ok && g.edges() == edges;
            ok = ok && serialize_graph6(g) == g6;
            ok = ok && serialize_graph6(Graph::from_edges(g.vertex_count(), edges)) == g6;
            if (!ok) ++failures;
        }
    }

    long long composed = 0, recovery_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        auto cs = compose_special(composed_spec(i));
        ++composed;
        auto out = recognize_special(cs.graph);
        if (!out.decomposition) {
            ++recovery_failures;
            continue;
        }
        const auto& got = *out.decomposition;
        auto sorted = [](VertexList v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        bool ok = got.ell() == cs.decomposition.ell() &&
                  sorted(got.core) == sorted(cs.decomposition.core);
        auto parts = [&sorted](const SpecialDecomposition& d) {
            std::vector<VertexList> p;
            for (const auto& b : d.bubbles) p.push_back(sorted(b.vertices));
            std::sort(p.begin(), p.end());
            return p;
        };
        ok = ok && parts(got) == parts(cs.decomposition);
        if (!ok) ++recovery_failures;
    }

    const bool pass = failures == 0 && recovery_failures == 0 && cases >= 20 && composed == 1000;
    std::ostringstream d;
    d << "graph6_failures=" << failures << " over " << cases
      << " fixture cases; recovery_failures=" << recovery_failures << " over " << composed
      << " compositions";
    return {pass, d.str()};
}

// --------------------------------------------------------------------------
// 8. Independent exact oracles agree: blossom matching vs exhaustive
//    matching up to order 14; branch-and-bound independence vs subset
//    enumeration up to order 18.

Outcome criterion_8() {
    std::vector<Graph> fixtures;
    {
        std::ifstream f(std::string(EGK_FIXTURE_DIR) + "/g6_cases.json");
        if (!f) return {false, "fixture corpus g6_cases.json not found"};
        nlohmann::json doc = nlohmann::json::parse(f);
        for (const auto& c : doc) fixtures.push_back(parse_graph6(c.at("g6").get<std::string>()));
    }
    for (std::uint64_t s = 0; s < 400; ++s) {
        Rng rng(3000 + s);
        fixtures.push_back(random_graph(4 + rng.below(11), rng));  // 4..14
    }
    for (std::uint64_t s = 0; s < 300; ++s) {
        Rng rng(4000 + s);
        fixtures.push_back(random_graph(4 + rng.below(15), rng));  // 4..18
    }

    long long mu_checked = 0, alpha_checked = 0, disagreements = 0;
    for (const auto& g : fixtures) {
        const int n = g.vertex_count();
        if (n <= 14) {
            ++mu_checked;
            if (matching_number(g) != mu_exact(g)) ++disagreements;
        }
        if (n <= 18) {
            ++alpha_checked;
            if (alpha_exact(g).size != alpha_by_enumeration(g, 18)) ++disagreements;
        }
    }
    const bool pass = disagreements == 0 && mu_checked >= 400 && alpha_checked >= 600;
    std::ostringstream d;
    d << "disagreements=" << disagreements << " (matching cross-checked on " << mu_checked
      << " graphs of order<=14, independence on " << alpha_checked << " of order<=18)";
    return {pass, d.str()};
}

}  // namespace

int main() {
    struct Step {
        const char* name;
        Outcome (*fn)();
    };
    const std::array<Step, 8> steps = {{
        {"product bound holds on exhaustive and random corpora", criterion_1},
        {"equality matches the biregular characterization when min<max degree", criterion_2},
        {"cubic equality matches the core-and-bubbles decomposition", criterion_3},
        {"every decomposition yields a verified equal-size witness pair", criterion_4},
        {"bubble invariants and sub-bubble extraction", criterion_5},
        {"known tight families: cycles, the 3-star, a 22-vertex alpha=mu=10 graph", criterion_6},
        {"byte-exact graph6 round trips and composition recovery", criterion_7},
        {"independent exact oracles agree", criterion_8},
    }};

    bool all = true;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = steps[i].fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion-" << (i + 1) << " " << steps[i].name
                  << ": " << o.detail << " [" << std::fixed << std::setprecision(1) << secs
                  << "s]" << std::endl;
        if (!o.pass) all = false;
    }
    return all ? 0 : 1;
}
