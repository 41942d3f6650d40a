#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "egk/matching.hpp"
#include "util.hpp"

using egk::Graph;

namespace {

egk::Bipartition bip_of(const Graph& g) {
    auto b = egk::try_bipartition(g);
    REQUIRE(b.has_value());
    return *b;
}

Graph random_bipartite(std::mt19937_64& rng, int a, int b, int denom) {
    std::vector<egk::Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            if (rng() % static_cast<unsigned>(denom) == 0) edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}

}  // namespace

TEST_CASE("matching validation") {
    auto g = testutil::cycle(4);
    CHECK(egk::verify_matching(g, {{{0, 1}, {2, 3}}}));
    CHECK(egk::verify_matching(g, {{}}));
    CHECK_FALSE(egk::verify_matching(g, {{{0, 1}, {1, 2}}}));  // shared vertex
    CHECK_FALSE(egk::verify_matching(g, {{{0, 2}}}));          // not an edge
    CHECK_FALSE(egk::verify_matching(g, {{{0, 4}}}));          // out of range
    CHECK_THROWS_AS(egk::mates(g, {{{0, 2}}}), std::invalid_argument);
}

TEST_CASE("hopcroft-karp on named graphs") {
    auto k33 = testutil::k33();
    auto m = egk::hopcroft_karp(k33, bip_of(k33));
    CHECK(m.size() == 3);
    CHECK(egk::verify_matching(k33, m));

    auto star = testutil::star(5);
    CHECK(egk::hopcroft_karp(star, bip_of(star)).size() == 1);

    auto p4 = testutil::path(4);
    CHECK(egk::hopcroft_karp(p4, bip_of(p4)).size() == 2);

    Graph empty(6);
    CHECK(egk::hopcroft_karp(empty, bip_of(empty)).size() == 0);

    CHECK_THROWS_AS(egk::hopcroft_karp(testutil::cycle(4), egk::Bipartition{{0, 1}, {2, 3}}),
                    std::invalid_argument);
}

TEST_CASE("hopcroft-karp matches reference on random bipartite graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        int a = 1 + static_cast<int>(rng() % 7), b = 1 + static_cast<int>(rng() % 7);
        Graph g = random_bipartite(rng, a, b, 2);
        auto m = egk::hopcroft_karp(g, bip_of(g));
        CHECK(egk::verify_matching(g, m));
        CHECK(m.size() == testutil::ref_mu(g));
    }
}

TEST_CASE("koenig cover is a minimum vertex cover") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 300; ++trial) {
        int a = 1 + static_cast<int>(rng() % 7), b = 1 + static_cast<int>(rng() % 7);
        Graph g = random_bipartite(rng, a, b, 3);
        auto bip = bip_of(g);
        auto m = egk::hopcroft_karp(g, bip);
        auto cover = egk::koenig_cover(g, bip, m);
        CHECK(egk::is_vertex_cover(g, cover));
        CHECK(static_cast<int>(cover.vertices.size()) == m.size());
    }
}

TEST_CASE("koenig cover rejects non-maximum matchings") {
    auto g = testutil::path(4);  // maximum matching has 2 edges
    auto bip = bip_of(g);
    CHECK_THROWS_AS(egk::koenig_cover(g, bip, egk::Matching{{{1, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(egk::koenig_cover(g, bip, egk::Matching{{{0, 2}}}), std::invalid_argument);
}

TEST_CASE("hall violator on deficient sides") {
    // star: the leaf side is deficient
    auto star = testutil::star(3);  // center 0, leaves 1..3
    auto bip = bip_of(star);        // side_a = {0}, side_b = {1,2,3}
    CHECK_FALSE(egk::hall_violator(star, bip, egk::Side::a).has_value());
    auto h = egk::hall_violator(star, bip, egk::Side::b);
    REQUIRE(h.has_value());
    CHECK(h->deficient_set == egk::VertexList{1, 2, 3});
    CHECK(h->neighborhood == egk::VertexList{0});

    // K33 saturates both sides
    auto k33 = testutil::k33();
    CHECK_FALSE(egk::hall_violator(k33, bip_of(k33), egk::Side::a).has_value());
    CHECK_FALSE(egk::hall_violator(k33, bip_of(k33), egk::Side::b).has_value());
}

TEST_CASE("hall violator is genuinely deficient on random graphs") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        int a = 1 + static_cast<int>(rng() % 6), b = 1 + static_cast<int>(rng() % 6);
        Graph g = random_bipartite(rng, a, b, 3);
        auto bip = bip_of(g);
        for (auto side : {egk::Side::a, egk::Side::b}) {
            auto res = egk::saturating_matching(g, bip, side);
            const auto& sv = side == egk::Side::a ? bip.side_a : bip.side_b;
            if (auto* m = std::get_if<egk::Matching>(&res)) {
                CHECK(egk::verify_matching(g, *m));
                CHECK(m->size() == static_cast<int>(sv.size()));
            } else {
                const auto& h = std::get<egk::HallViolator>(res);
                CHECK(h.neighborhood.size() < h.deficient_set.size());
                // every member of S is in the side, N(S) is exactly its neighborhood
                for (int v : h.deficient_set)
                    CHECK(std::binary_search(sv.begin(), sv.end(), v));
                std::vector<char> nb(static_cast<std::size_t>(g.vertex_count()), 0);
                for (int v : h.deficient_set)
                    for (int w : g.neighbors(v)) nb[static_cast<std::size_t>(w)] = 1;
                egk::VertexList expect;
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (nb[static_cast<std::size_t>(v)]) expect.push_back(v);
                CHECK(h.neighborhood == expect);
            }
        }
    }
}

TEST_CASE("blossom matching on named graphs") {
    CHECK(egk::blossom_maximum_matching(testutil::petersen()).size() == 5);
    CHECK(egk::blossom_maximum_matching(testutil::cycle(5)).size() == 2);
    CHECK(egk::blossom_maximum_matching(testutil::cycle(6)).size() == 3);
    CHECK(egk::blossom_maximum_matching(testutil::complete(7)).size() == 3);
    CHECK(egk::blossom_maximum_matching(testutil::star(4)).size() == 1);
    CHECK(egk::blossom_maximum_matching(Graph(5)).size() == 0);
    CHECK(egk::blossom_maximum_matching(Graph()).size() == 0);

    // two triangles joined by a path: blossoms on both ends
    auto g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4},
                                   {4, 5}, {5, 6}, {6, 7}, {7, 5}});
    auto m = egk::blossom_maximum_matching(g);
    CHECK(egk::verify_matching(g, m));
    CHECK(m.size() == 4);
}

TEST_CASE("blossom matches reference on random graphs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        std::vector<egk::Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        auto m = egk::blossom_maximum_matching(g);
        CHECK(egk::verify_matching(g, m));
        CHECK(m.size() == testutil::ref_mu(g));
    }
}
