#include "windex/terminal_wiener.hpp"

namespace windex {

index_value terminal_wiener(const Graph& g, GraphClass cls, const StripSchedule& schedule) {
    const std::size_t n = g.vertex_count();
    guard_index_safe_size(n);

    // Pendant status is decided on the original graph, before any stripping;
    // vertices that only become degree-1 later keep their accumulated count.
    std::vector<index_value> count(n, 0);
    index_value nleaf = 0;
    for (vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 1) {
            count[v] = 1;
            ++nleaf;
        }
    }

    index_value total = 0;
    for (const auto& [leaf, parent] : schedule.events) {
        // count[leaf] <= nleaf: a side of the cut cannot hold more pendants
        // than exist.
        total = checked_add(total, checked_mul(count[leaf], nleaf - count[leaf]));
        count[parent] += count[leaf];
    }

    if (cls == GraphClass::unicyclic) {
        CycleProfile profile;
        profile.val.reserve(schedule.cycle.size());
        for (vertex v : schedule.cycle) profile.val.push_back(count[v]);
        total = checked_add(total, cycle_distance_sum(profile));
    }
    return total;
}

index_value terminal_wiener(const Graph& g) {
    const GraphClass cls = classify(g);
    return terminal_wiener(g, cls, strip(g, cls));
}

}  // namespace windex
