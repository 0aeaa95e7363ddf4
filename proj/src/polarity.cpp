#include "windex/polarity.hpp"

#include <algorithm>
#include <stdexcept>

namespace windex {

namespace {

struct DepthCounts {
    index_value total = 0;
    std::vector<index_value> count1;
    std::vector<index_value> count2;
};

// Per event (leaf, parent): pairs at distance 3 through the cut edge are
// count2[parent] + count2[leaf] + count1[parent] * count1[leaf], read before
// the merge; then the parent absorbs the leaf one step further away.
DepthCounts fold_depth_counts(const Graph& g, const StripSchedule& schedule) {
    DepthCounts f;
    f.count1.assign(g.vertex_count(), 0);
    f.count2.assign(g.vertex_count(), 0);
    for (const auto& [leaf, parent] : schedule.events) {
        const index_value through_edge =
            checked_add(checked_add(f.count2[parent], f.count2[leaf]),
                        checked_mul(f.count1[parent], f.count1[leaf]));
        f.total = checked_add(f.total, through_edge);
        f.count1[parent] += 1;
        f.count2[parent] += f.count1[leaf];
    }
    return f;
}

}  // namespace

index_value polarity_tree(const Graph& g, const StripSchedule& schedule) {
    guard_index_safe_size(g.vertex_count());
    return fold_depth_counts(g, schedule).total;
}

index_value polarity_cycle_remainder(std::span<const index_value> count1,
                                     std::span<const index_value> count2) {
    const std::size_t k = count1.size();
    if (k < 3 || count2.size() != k) {
        throw std::invalid_argument("polarity_cycle_remainder: need matching counts for k >= 3");
    }
    const auto depth_count = [&](std::size_t pos, std::size_t depth) -> index_value {
        switch (depth) {
            case 0: return 1;  // the cycle vertex itself
            case 1: return count1[pos];
            default: return count2[pos];
        }
    };

    index_value total = 0;
    const std::size_t max_offset = std::min<std::size_t>(3, k / 2);
    for (std::size_t offset = 1; offset <= max_offset; ++offset) {
        // Base positions generate each unordered position pair exactly once;
        // at the antipodal offset of an even cycle both ends generate the
        // same pair, so only half the bases are walked.
        const bool antipodal = (k % 2 == 0) && (offset == k / 2);
        const std::size_t bases = antipodal ? k / 2 : k;
        for (std::size_t i = 0; i < bases; ++i) {
            const std::size_t j = (i + offset) % k;
            for (std::size_t a = 0; a + offset <= 3; ++a) {
                const std::size_t b = 3 - offset - a;
                total = checked_add(total, checked_mul(depth_count(i, a), depth_count(j, b)));
            }
        }
    }
    return total;
}

index_value wiener_polarity(const Graph& g, GraphClass cls, const StripSchedule& schedule) {
    guard_index_safe_size(g.vertex_count());
    DepthCounts f = fold_depth_counts(g, schedule);
    if (cls == GraphClass::tree) return f.total;

    std::vector<index_value> c1;
    std::vector<index_value> c2;
    c1.reserve(schedule.cycle.size());
    c2.reserve(schedule.cycle.size());
    for (vertex v : schedule.cycle) {
        c1.push_back(f.count1[v]);
        c2.push_back(f.count2[v]);
    }
    return checked_add(f.total, polarity_cycle_remainder(c1, c2));
}

index_value wiener_polarity(const Graph& g) {
    const GraphClass cls = classify(g);
    return wiener_polarity(g, cls, strip(g, cls));
}

}  // namespace windex
