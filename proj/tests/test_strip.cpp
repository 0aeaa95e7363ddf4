#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "test_support.hpp"
#include "windex/strip.hpp"

using namespace windex;
using test::graph_of;

namespace {

// Replays a schedule against the graph: every leaf has live degree 1 at its
// event, the parent is live, and no vertex is removed twice.
void check_valid_schedule(const Graph& g, const StripSchedule& s) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> deg(n);
    for (vertex v = 0; v < n; ++v) deg[v] = static_cast<std::uint32_t>(g.degree(v));
    std::vector<char> removed(n, 0);
    for (const auto& [leaf, parent] : s.events) {
        REQUIRE(!removed[leaf]);
        REQUIRE(!removed[parent]);
        REQUIRE(deg[leaf] == 1);
        REQUIRE(g.has_edge(leaf, parent));
        removed[leaf] = 1;
        deg[leaf] = 0;
        --deg[parent];
    }
}

std::multiset<std::pair<vertex, vertex>> event_edges(const StripSchedule& s) {
    std::multiset<std::pair<vertex, vertex>> out;
    for (const auto& [leaf, parent] : s.events) {
        out.emplace(std::min(leaf, parent), std::max(leaf, parent));
    }
    return out;
}

}  // namespace

TEST_CASE("path schedule follows the LIFO discipline") {
    const Graph g = make_path(4);
    const StripSchedule s = strip(g, GraphClass::tree);
    REQUIRE(s.events.size() == 3);
    CHECK(s.cycle.empty());
    check_valid_schedule(g, s);
    // initial leaves pushed ascending (0 then 3), so 3 pops first and the
    // chain collapses from the right
    CHECK(s.events[0] == RemovalEvent{3, 2});
    CHECK(s.events[1] == RemovalEvent{2, 1});
    CHECK(s.events[2] == RemovalEvent{1, 0});
    // tree events cover the edge set exactly
    const auto edges = g.edges();
    CHECK(event_edges(s) == std::multiset<std::pair<vertex, vertex>>(edges.begin(), edges.end()));
    CHECK(strip(g, GraphClass::tree) == s);
}

TEST_CASE("bare cycle yields no events and the canonical walk") {
    const StripSchedule s = strip(make_cycle(5), GraphClass::unicyclic);
    CHECK(s.events.empty());
    CHECK(s.cycle == std::vector<vertex>{0, 1, 2, 3, 4});
}

TEST_CASE("triangle with pendant") {
    const Graph g = graph_of(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    const StripSchedule s = strip(g, GraphClass::unicyclic);
    REQUIRE(s.events.size() == 1);
    CHECK(s.events[0] == RemovalEvent{3, 0});
    CHECK(s.cycle == std::vector<vertex>{0, 1, 2});
}

TEST_CASE("one- and two-vertex trees") {
    CHECK(strip(make_path(1), GraphClass::tree).events.empty());
    const StripSchedule s = strip(make_path(2), GraphClass::tree);
    REQUIRE(s.events.size() == 1);
    CHECK(s.events[0] == RemovalEvent{1, 0});
}

TEST_CASE("tree events cover the edge set exactly") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = random_tree(1 + seed * 13, seed);
        const StripSchedule s = strip(g, GraphClass::tree);
        CHECK(s.events.size() == g.vertex_count() - 1);
        CHECK(s.cycle.empty());
        check_valid_schedule(g, s);
        const auto edges = g.edges();
        CHECK(event_edges(s) ==
              std::multiset<std::pair<vertex, vertex>>(edges.begin(), edges.end()));
    }
}

TEST_CASE("unicyclic events cover exactly the non-cycle edges") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const std::size_t n = 3 + seed * 11;
        const Graph g = random_unicyclic(n, seed);
        const StripSchedule s = strip(g, GraphClass::unicyclic);
        check_valid_schedule(g, s);

        const std::size_t k = s.cycle.size();
        REQUIRE(k >= 3);
        CHECK(s.events.size() == n - k);
        CHECK(std::set<vertex>(s.cycle.begin(), s.cycle.end()).size() == k);
        // consecutive walk positions (and the closing step) are adjacent
        auto covered = event_edges(s);
        for (std::size_t i = 0; i < k; ++i) {
            const vertex a = s.cycle[i];
            const vertex b = s.cycle[(i + 1) % k];
            CHECK(g.has_edge(a, b));
            covered.emplace(std::min(a, b), std::max(a, b));
        }
        // events + cycle edges = the whole edge set
        const auto edges = g.edges();
        CHECK(covered == std::multiset<std::pair<vertex, vertex>>(edges.begin(), edges.end()));
        // deterministic
        CHECK(strip(g, GraphClass::unicyclic) == s);
    }
}

TEST_CASE("misclassification is detected") {
    CHECK_THROWS_AS(strip(make_path(5), GraphClass::unicyclic), std::logic_error);
    CHECK_THROWS_AS(strip(make_cycle(5), GraphClass::tree), std::logic_error);
}
