#pragma once

#include <cstddef>
#include <vector>

#include "windex/checked.hpp"
#include "windex/graph.hpp"
#include "windex/strip.hpp"

namespace windex {

// W(P_n) = n(n^2-1)/6 stays below 2^63 up to here; larger inputs are rejected
// before any arithmetic can wrap.
inline constexpr std::size_t kIndexSafeMaxN = 3'000'000;

inline void guard_index_safe_size(std::size_t n) {
    if (n > kIndexSafeMaxN) {
        throw overflow_error("graph too large for 64-bit index arithmetic (n > " +
                             std::to_string(kIndexSafeMaxN) + ")");
    }
}

// Per-position aggregated counts of the residual cycle, in cyclic order.
// val[i] is the number of vertices absorbed into cycle position i (including
// the cycle vertex itself) for the plain Wiener index, or the number of
// absorbed pendant vertices for the terminal variant.
struct CycleProfile {
    std::vector<index_value> val;

    std::size_t length() const noexcept { return val.size(); }
};

// Sum over unordered cycle-position pairs {i, j} of
// val[i] * val[j] * dcyc(i, j), dcyc being the cyclic hop distance. Computed
// in O(k) with a sliding half-window; the antipodal pairs of an even cycle
// enter both half-windows and are subtracted once with weight k/2.
index_value cycle_distance_sum(const CycleProfile& profile);

// Wiener index of a tree: fold the removal events, adding
// count[leaf] * (n - count[leaf]) per cut edge.
index_value wiener_tree(const Graph& g, const StripSchedule& schedule);

// Wiener index of a unicyclic graph: the tree-phase fold over the events plus
// the cycle-distance sum of the frozen counts at the cycle positions.
index_value wiener_unicyclic(const Graph& g, const StripSchedule& schedule);

// Dispatch on a known class with a shared schedule.
index_value wiener(const Graph& g, GraphClass cls, const StripSchedule& schedule);

// Classifies, strips and dispatches.
index_value wiener(const Graph& g, GraphClass cls);
index_value wiener(const Graph& g);

}  // namespace windex
