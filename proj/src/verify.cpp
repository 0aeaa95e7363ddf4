#include "windex/verify.hpp"

#include <algorithm>

#include "windex/oracles.hpp"
#include "windex/polarity.hpp"
#include "windex/rng.hpp"
#include "windex/strip.hpp"
#include "windex/terminal_wiener.hpp"
#include "windex/wiener.hpp"

namespace windex {

namespace {

// Compares the stripping path against the oracles on one graph; fills the
// failure fields and returns false on the first mismatch.
bool check_graph(const Graph& g, unsigned threads, VerifyResult& result) {
    const GraphClass cls = classify(g);
    const StripSchedule schedule = strip(g, cls);

    const index_value got_w = wiener(g, cls, schedule);
    const index_value got_tw = terminal_wiener(g, cls, schedule);
    const index_value got_wp = wiener_polarity(g, cls, schedule);

    const index_value want_w = oracle_wiener(g, threads);
    const index_value want_tw = oracle_terminal(g, threads);
    const index_value want_wp = oracle_polarity(g, threads);

    if (got_w == want_w && got_tw == want_tw && got_wp == want_wp) return true;

    result.pass = false;
    result.counterexample_edge_list = to_edge_list(g);
    result.failure = "mismatch on " + std::string(to_string(cls)) +
                     " with n=" + std::to_string(g.vertex_count());
    if (got_w != want_w) {
        result.failure += "; wiener " + std::to_string(got_w) + " != " + std::to_string(want_w);
    }
    if (got_tw != want_tw) {
        result.failure +=
            "; terminal_wiener " + std::to_string(got_tw) + " != " + std::to_string(want_tw);
    }
    if (got_wp != want_wp) {
        result.failure +=
            "; wiener_polarity " + std::to_string(got_wp) + " != " + std::to_string(want_wp);
    }
    return false;
}

}  // namespace

VerifyResult verify_against_oracles(const VerifyOptions& options) {
    VerifyResult result;

    // Exhaustive labeled trees.
    const std::size_t tree_max = std::min<std::size_t>(options.n_max, 8);
    for (std::size_t n = 1; n <= tree_max && result.pass; ++n) {
        for_each_labeled_tree(n, [&](const Graph& g) {
            if (!result.pass) return;
            ++result.trees_checked;
            check_graph(g, options.oracle_threads, result);
        });
    }

    // Exhaustive unicyclic graphs: every tree plus every possible extra edge.
    const std::size_t uni_max = std::min<std::size_t>(options.n_max, 7);
    for (std::size_t n = 3; n <= uni_max && result.pass; ++n) {
        for_each_labeled_tree(n, [&](const Graph& tree) {
            if (!result.pass) return;
            auto edges = tree.edges();
            for (vertex u = 0; u < n && result.pass; ++u) {
                for (vertex v = u + 1; v < n; ++v) {
                    if (tree.has_edge(u, v)) continue;
                    edges.emplace_back(u, v);
                    const Graph g = Graph::from_edges(n, edges);
                    edges.pop_back();
                    ++result.unicyclic_checked;
                    if (!check_graph(g, options.oracle_threads, result)) break;
                }
            }
        });
    }

    // Seeded random instances up to n_max.
    SeededRng rng(mix_seed(options.seed, 0x7e51f7));
    for (std::size_t i = 0; i < options.instances && result.pass; ++i) {
        const std::size_t n = 2 + rng.below(std::max<std::size_t>(options.n_max, 2) - 1);
        ++result.random_checked;
        if (!check_graph(random_tree(n, rng.next()), options.oracle_threads, result)) break;
        const std::size_t nu = 3 + rng.below(std::max<std::size_t>(options.n_max, 3) - 2);
        ++result.random_checked;
        if (!check_graph(random_unicyclic(nu, rng.next()), options.oracle_threads, result)) break;
    }
    return result;
}

}  // namespace windex
