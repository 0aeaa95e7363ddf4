#pragma once

#include <vector>

#include "windex/graph.hpp"

namespace windex {

// One leaf removal: at the moment of the event, leaf has live degree exactly 1
// and parent is its unique still-live neighbor.
struct RemovalEvent {
    vertex leaf;
    vertex parent;

    bool operator==(const RemovalEvent&) const = default;
};

// Ordered leaf-removal schedule plus the residual cycle, the shared substrate
// for all three index computations. For a tree there are exactly n-1 events
// and the cycle is empty; for a unicyclic graph there are n-k events and the
// cycle lists the k >= 3 surviving vertices in consecutive cyclic order.
struct StripSchedule {
    std::vector<RemovalEvent> events;
    std::vector<vertex> cycle;

    bool operator==(const StripSchedule&) const = default;
};

// Repeatedly removes degree-1 vertices using a LIFO stack seeded with the
// initial leaves in ascending vertex id, then (for unicyclic inputs) walks the
// residual cycle from its lowest-id vertex, stepping first toward the smaller
// eligible neighbor. Deterministic; O(n + m). Throws std::logic_error if the
// residue contradicts the declared class.
StripSchedule strip(const Graph& g, GraphClass cls);

}  // namespace windex
