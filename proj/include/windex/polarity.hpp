#pragma once

#include <span>

#include "windex/wiener.hpp"

namespace windex {

// Wiener polarity index: the number of unordered vertex pairs at distance
// exactly 3. The tree fold keeps, per live vertex, how many absorbed vertices
// sit at distance 1 and 2 on its own side; each event pairs the two sides of
// the cut edge.
index_value polarity_tree(const Graph& g, const StripSchedule& schedule);

// Distance-3 pairs whose endpoints hang at (or are) two DISTINCT cycle
// positions. count1/count2 hold the per-position depth-1 and depth-2 counts in
// cyclic order (depth 0 is the position itself). Only cyclic offsets 1..3
// contribute; for even k the antipodal offset is enumerated over half the
// positions so each pair is counted once. Pairs within a single position's
// hanging subtree are already covered by the tree fold.
index_value polarity_cycle_remainder(std::span<const index_value> count1,
                                     std::span<const index_value> count2);

// Tree: the fold alone. Unicyclic: fold over the events plus the cycle
// remainder on the frozen depth counts.
index_value wiener_polarity(const Graph& g, GraphClass cls, const StripSchedule& schedule);
index_value wiener_polarity(const Graph& g);

}  // namespace windex
