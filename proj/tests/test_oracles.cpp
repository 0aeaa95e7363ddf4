#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_support.hpp"
#include "windex/oracles.hpp"

using namespace windex;
using test::graph_of;

TEST_CASE("bfs_distances") {
    CHECK(bfs_distances(make_path(4), 0) == std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK(bfs_distances(make_cycle(6), 0) == std::vector<std::uint32_t>{0, 1, 2, 3, 2, 1});
    CHECK(bfs_distances(make_star(4), 0) == std::vector<std::uint32_t>{0, 1, 1, 1});
    const auto d = bfs_distances(graph_of(3, {{0, 1}}), 0);
    CHECK(d[2] == kUnreachable);
}

TEST_CASE("floyd_warshall") {
    const DistanceMatrix m = floyd_warshall(make_path(3));
    const std::uint32_t expect[3][3] = {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(m.at(i, j) == expect[i][j]);
        }
    }

    const DistanceMatrix c4 = floyd_warshall(make_cycle(4));
    int ones = 0, twos = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i == j) {
                CHECK(c4.at(i, j) == 0);
            } else if (c4.at(i, j) == 1) {
                ++ones;
            } else if (c4.at(i, j) == 2) {
                ++twos;
            }
        }
    }
    CHECK(ones == 8);
    CHECK(twos == 4);

    const DistanceMatrix disc = floyd_warshall(graph_of(2, {}));
    CHECK(disc.at(0, 1) == kUnreachable);
    CHECK(disc.at(0, 0) == 0);
}

TEST_CASE("all four APSP routes agree") {
    const auto check_all_equal = [](const Graph& g) {
        const DistanceMatrix fw = floyd_warshall(g);
        CHECK(bfs_all_pairs(g) == fw);
        CHECK(sap_distances(g) == fw);
        CHECK(fap_distances(g) == fw);
    };
    check_all_equal(make_path(3));
    check_all_equal(make_path(1));
    check_all_equal(graph_of(2, {{0, 1}}));
    check_all_equal(graph_of(2, {}));
    check_all_equal(make_cycle(5));
    check_all_equal(random_tree(20, 3));
    check_all_equal(random_unicyclic(25, 4));
    check_all_equal(graph_of(6, {{0, 1}, {2, 3}, {3, 4}}));  // disconnected
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        check_all_equal(random_tree(10 + seed * 5, seed));
        check_all_equal(random_unicyclic(10 + seed * 5, seed));
    }
}

TEST_CASE("definitional sums, hand-audited") {
    CHECK(oracle_wiener(make_path(4)) == 10);       // 1+2+3 + 1+2 + 1
    CHECK(oracle_terminal(make_star(5)) == 12);     // 6 leaf pairs, distance 2 each
    CHECK(oracle_polarity(make_cycle(6)) == 3);     // antipodal pairs
    CHECK_THROWS_AS(oracle_wiener(graph_of(4, {{0, 1}, {2, 3}})), disconnected_error);
    CHECK_THROWS_AS(oracle_terminal(graph_of(4, {{0, 1}, {2, 3}})), disconnected_error);
    CHECK_THROWS_AS(oracle_polarity(graph_of(4, {{0, 1}, {2, 3}})), disconnected_error);
    CHECK_THROWS_AS(oracle_wiener(Graph{}), disconnected_error);
}

TEST_CASE("oracle_wiener equals the matrix upper triangle") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Graph g = random_unicyclic(12 + seed * 7, seed);
        CHECK(oracle_wiener(g) == wiener_from_matrix(floyd_warshall(g)));
        CHECK(oracle_terminal(g) == terminal_from_matrix(g, floyd_warshall(g)));
        CHECK(oracle_polarity(g) == polarity_from_matrix(floyd_warshall(g)));
    }
}

TEST_CASE("wiener_from_matrix rejects unreachable pairs") {
    CHECK_THROWS_AS(wiener_from_matrix(floyd_warshall(graph_of(2, {}))), disconnected_error);
}

TEST_CASE("parallel sweeps return the single-thread value") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const Graph g = seed % 2 == 0 ? random_tree(120, seed) : random_unicyclic(121, seed);
        CHECK(oracle_wiener(g, 4) == oracle_wiener(g, 1));
        CHECK(oracle_terminal(g, 4) == oracle_terminal(g, 1));
        CHECK(oracle_polarity(g, 4) == oracle_polarity(g, 1));
    }
}
