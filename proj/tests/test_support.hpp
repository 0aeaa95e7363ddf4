#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "windex/checked.hpp"
#include "windex/graph.hpp"
#include "windex/rng.hpp"
#include "windex/strip.hpp"

namespace windex::test {

inline Graph graph_of(std::size_t n, std::initializer_list<std::pair<vertex, vertex>> edges) {
    std::vector<std::pair<vertex, vertex>> e(edges);
    return Graph::from_edges(n, e);
}

// Quadratic definitional comparator for cycle_distance_sum: enumerate every
// unordered position pair with its cyclic hop distance.
inline index_value brute_cycle_distance_sum(const std::vector<index_value>& val) {
    const std::size_t k = val.size();
    index_value total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const std::size_t forward = j - i;
            const std::size_t distance = std::min(forward, k - forward);
            total += val[i] * val[j] * static_cast<index_value>(distance);
        }
    }
    return total;
}

// A valid leaf-removal schedule drawn independently of the library's LIFO
// discipline: removes a uniformly random current leaf each step, then walks
// the residual cycle from a random start in a random direction. Used to show
// the index folds are order-independent.
inline StripSchedule random_strip(const Graph& g, GraphClass cls, std::uint64_t seed) {
    SeededRng rng(seed);
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> deg(n);
    std::vector<vertex> leaves;
    for (vertex v = 0; v < n; ++v) {
        deg[v] = static_cast<std::uint32_t>(g.degree(v));
        if (deg[v] == 1) leaves.push_back(v);
    }

    StripSchedule s;
    while (!leaves.empty()) {
        const std::size_t idx = rng.below(leaves.size());
        const vertex leaf = leaves[idx];
        leaves[idx] = leaves.back();
        leaves.pop_back();
        if (deg[leaf] != 1) continue;  // survivor whose last edge is already gone
        deg[leaf] = 0;
        for (vertex nb : g.neighbors(leaf)) {
            if (deg[nb] == 0) continue;
            s.events.push_back({leaf, nb});
            if (--deg[nb] == 1) leaves.push_back(nb);
            break;
        }
    }

    if (cls == GraphClass::unicyclic) {
        std::vector<vertex> residue;
        for (vertex v = 0; v < n; ++v) {
            if (deg[v] == 2) residue.push_back(v);
        }
        const vertex start = residue[rng.below(residue.size())];
        std::vector<vertex> first_step;
        for (vertex nb : g.neighbors(start)) {
            if (deg[nb] == 2) first_step.push_back(nb);
        }
        vertex prev = start;
        vertex current = first_step[rng.below(first_step.size())];
        s.cycle.push_back(start);
        while (current != start) {
            s.cycle.push_back(current);
            vertex next = current;
            for (vertex nb : g.neighbors(current)) {
                if (deg[nb] == 2 && nb != prev) {
                    next = nb;
                    break;
                }
            }
            prev = current;
            current = next;
        }
    }
    return s;
}

}  // namespace windex::test
