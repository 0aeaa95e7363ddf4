#include "windex/wiener.hpp"

#include <stdexcept>

namespace windex {

index_value cycle_distance_sum(const CycleProfile& profile) {
    const std::size_t k = profile.length();
    if (k < 3) throw std::invalid_argument("cycle_distance_sum: cycle length must be >= 3");
    const auto& c = profile.val;
    const index_value half = k / 2;

    // Half-window sums anchored at position 0:
    //   weighted = sum_{t=1..k/2} t * c[t]
    //   plain    = sum_{t=1..k/2} c[t]
    index_value weighted = 0;
    index_value plain = 0;
    for (std::size_t t = 1; t <= half; ++t) {
        weighted = checked_add(weighted, checked_mul(static_cast<index_value>(t), c[t]));
        plain = checked_add(plain, c[t]);
    }

    index_value total = checked_mul(c[0], weighted);
    for (std::size_t i = 1; i < k; ++i) {
        const index_value entering = c[(i + half) % k];
        // Advance the window one position: every element already inside drops
        // one unit of weight, the entering element arrives at weight k/2.
        // weighted >= plain and plain >= c[i] hold, so the subtractions are safe.
        weighted = checked_add(weighted - plain, checked_mul(half, entering));
        plain = plain - c[i] + entering;
        total = checked_add(total, checked_mul(c[i], weighted));
    }

    if (k % 2 == 0) {
        // Antipodal pairs were accumulated from both endpoints; remove one copy.
        index_value overcount = 0;
        for (std::size_t i = 0; i < k / 2; ++i) {
            overcount = checked_add(overcount, checked_mul(half, checked_mul(c[i], c[i + k / 2])));
        }
        total = checked_sub(total, overcount);
    }
    return total;
}

namespace {

// Shared tree-phase fold: accumulates count[leaf] * (n - count[leaf]) per
// event while merging the leaf's count into its parent. Afterwards count[v]
// holds, for every surviving vertex v, the size of the component absorbed
// into v.
index_value fold_counts(const Graph& g, const StripSchedule& schedule,
                        std::vector<index_value>& count) {
    const auto n = static_cast<index_value>(g.vertex_count());
    index_value total = 0;
    for (const auto& [leaf, parent] : schedule.events) {
        total = checked_add(total, checked_mul(count[leaf], n - count[leaf]));
        count[parent] += count[leaf];
    }
    return total;
}

CycleProfile profile_from_counts(const StripSchedule& schedule,
                                 const std::vector<index_value>& count) {
    CycleProfile profile;
    profile.val.reserve(schedule.cycle.size());
    for (vertex v : schedule.cycle) profile.val.push_back(count[v]);
    return profile;
}

}  // namespace

index_value wiener_tree(const Graph& g, const StripSchedule& schedule) {
    guard_index_safe_size(g.vertex_count());
    std::vector<index_value> count(g.vertex_count(), 1);
    return fold_counts(g, schedule, count);
}

index_value wiener_unicyclic(const Graph& g, const StripSchedule& schedule) {
    guard_index_safe_size(g.vertex_count());
    std::vector<index_value> count(g.vertex_count(), 1);
    const index_value tree_phase = fold_counts(g, schedule, count);
    return checked_add(tree_phase, cycle_distance_sum(profile_from_counts(schedule, count)));
}

index_value wiener(const Graph& g, GraphClass cls, const StripSchedule& schedule) {
    return cls == GraphClass::tree ? wiener_tree(g, schedule) : wiener_unicyclic(g, schedule);
}

index_value wiener(const Graph& g, GraphClass cls) {
    return wiener(g, cls, strip(g, cls));
}

index_value wiener(const Graph& g) {
    const GraphClass cls = classify(g);
    return wiener(g, cls, strip(g, cls));
}

}  // namespace windex
