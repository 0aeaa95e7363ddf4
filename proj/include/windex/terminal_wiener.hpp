#pragma once

#include "windex/wiener.hpp"

namespace windex {

// Terminal Wiener index: the distance sum restricted to pairs of pendant
// vertices of the original graph. Counts are seeded 1 for original degree-1
// vertices and 0 otherwise, every edge contributes
// count[leaf] * (nleaf - count[leaf]), and unicyclic inputs add the
// cycle-distance sum of the frozen pendant counts. Graphs with fewer than two
// pendant vertices yield 0 (empty pair sum).
index_value terminal_wiener(const Graph& g, GraphClass cls, const StripSchedule& schedule);
index_value terminal_wiener(const Graph& g);

}  // namespace windex
