#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_support.hpp"
#include "windex/oracles.hpp"
#include "windex/polarity.hpp"

using namespace windex;
using test::graph_of;

TEST_CASE("paths count n-3 pairs at distance 3") {
    CHECK(oracle_polarity(make_path(4)) == 1);
    CHECK(wiener_polarity(make_path(4)) == 1);
    CHECK(wiener_polarity(make_path(7)) == 4);
    for (std::size_t n = 4; n <= 100; ++n) {
        CHECK(wiener_polarity(make_path(n)) == n - 3);
    }
    CHECK(wiener_polarity(make_path(3)) == 0);
    CHECK(wiener_polarity(make_path(1)) == 0);
}

TEST_CASE("small-diameter graphs have no distance-3 pairs") {
    CHECK(wiener_polarity(make_star(4)) == 0);
    CHECK(wiener_polarity(make_cycle(3)) == 0);
    CHECK(wiener_polarity(make_cycle(4)) == 0);
    CHECK(wiener_polarity(make_cycle(5)) == 0);
}

TEST_CASE("bare cycles") {
    CHECK(oracle_polarity(make_cycle(6)) == 3);  // antipodal pairs, once each
    CHECK(wiener_polarity(make_cycle(6)) == 3);
    CHECK(oracle_polarity(make_cycle(7)) == 7);
    CHECK(wiener_polarity(make_cycle(7)) == 7);
    for (std::size_t k = 7; k <= 100; ++k) {
        CHECK(wiener_polarity(make_cycle(k)) == k);
    }
}

TEST_CASE("square with one pendant") {
    const Graph g = graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    // the only pair at distance 3 is pendant 4 against the opposite corner 2
    CHECK(oracle_polarity(g) == 1);
    CHECK(wiener_polarity(g) == 1);
}

TEST_CASE("cycle remainder on explicit depth profiles") {
    using V = std::vector<index_value>;
    const V zeros3(3, 0), zeros4(4, 0), zeros6(6, 0), zeros7(7, 0);
    CHECK(polarity_cycle_remainder(zeros7, zeros7) == 7);
    CHECK(polarity_cycle_remainder(zeros6, zeros6) == 3);
    CHECK(polarity_cycle_remainder(zeros3, zeros3) == 0);
    // square with a pendant at position 0: depth 1 + offset 2 + depth 0
    CHECK(polarity_cycle_remainder(V{1, 0, 0, 0}, zeros4) == 1);

    CHECK_THROWS_AS(polarity_cycle_remainder(V{0, 0}, V{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(polarity_cycle_remainder(V{0, 0, 0}, V{0, 0}), std::invalid_argument);
}

TEST_CASE("even-cycle antipodal pairs are counted once: sun graphs") {
    // C_4 with a pendant on every cycle vertex
    const Graph sun4 = graph_of(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                    {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    CHECK(oracle_polarity(sun4) == 8);
    CHECK(wiener_polarity(sun4) == 8);
    CHECK(polarity_cycle_remainder(std::vector<index_value>(4, 1),
                                   std::vector<index_value>(4, 0)) == 8);

    // C_6 with a pendant on every cycle vertex
    std::vector<std::pair<vertex, vertex>> edges;
    for (vertex i = 0; i < 6; ++i) {
        edges.emplace_back(i, (i + 1) % 6);
        edges.emplace_back(i, i + 6);
    }
    const Graph sun6 = Graph::from_edges(12, edges);
    CHECK(oracle_polarity(sun6) == 21);
    CHECK(wiener_polarity(sun6) == 21);
    CHECK(polarity_cycle_remainder(std::vector<index_value>(6, 1),
                                   std::vector<index_value>(6, 0)) == 21);
}

TEST_CASE("oracle equivalence on all small trees and unicyclic graphs") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_labeled_tree(n, [&](const Graph& g) {
            CHECK(wiener_polarity(g) == oracle_polarity(g));
        });
    }
    for (std::size_t n = 3; n <= 5; ++n) {
        for_each_labeled_tree(n, [&](const Graph& tree) {
            auto edges = tree.edges();
            for (vertex u = 0; u < n; ++u) {
                for (vertex v = u + 1; v < n; ++v) {
                    if (tree.has_edge(u, v)) continue;
                    edges.emplace_back(u, v);
                    const Graph g = Graph::from_edges(n, edges);
                    edges.pop_back();
                    CHECK(wiener_polarity(g) == oracle_polarity(g));
                }
            }
        });
    }
}

TEST_CASE("random instances match the oracle") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const std::size_t n = 5 + seed * 2;
        CHECK(wiener_polarity(random_tree(n, seed)) == oracle_polarity(random_tree(n, seed)));
        CHECK(wiener_polarity(random_unicyclic(n, seed)) ==
              oracle_polarity(random_unicyclic(n, seed)));
    }
}

TEST_CASE("order independence") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Graph t = random_tree(25 + seed, seed);
        const Graph u = random_unicyclic(25 + seed, seed);
        const index_value expect_t = wiener_polarity(t);
        const index_value expect_u = wiener_polarity(u);
        for (std::uint64_t order = 0; order < 4; ++order) {
            CHECK(wiener_polarity(t, GraphClass::tree,
                                  test::random_strip(t, GraphClass::tree, order)) == expect_t);
            CHECK(wiener_polarity(u, GraphClass::unicyclic,
                                  test::random_strip(u, GraphClass::unicyclic, order)) ==
                  expect_u);
        }
    }
}
