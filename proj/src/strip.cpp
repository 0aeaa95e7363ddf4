#include "windex/strip.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace windex {

namespace {
constexpr vertex kNone = std::numeric_limits<vertex>::max();
}

StripSchedule strip(const Graph& g, GraphClass cls) {
    const std::size_t n = g.vertex_count();
    StripSchedule schedule;

    std::vector<std::uint32_t> deg(n);
    std::vector<vertex> stack;
    for (vertex v = 0; v < n; ++v) {
        deg[v] = static_cast<std::uint32_t>(g.degree(v));
        if (deg[v] == 1) stack.push_back(v);
    }

    schedule.events.reserve(n > 0 ? n - 1 : 0);
    while (!stack.empty()) {
        const vertex leaf = stack.back();
        stack.pop_back();
        if (deg[leaf] == 0) continue;  // final survivor of a tree
        deg[leaf] = 0;
        for (vertex nb : g.neighbors(leaf)) {
            if (deg[nb] == 0) continue;
            schedule.events.push_back({leaf, nb});
            if (--deg[nb] == 1) stack.push_back(nb);
            break;  // a live leaf has exactly one live neighbor
        }
    }

    if (cls == GraphClass::tree) {
        if (n > 0 && schedule.events.size() != n - 1) {
            throw std::logic_error("strip: residual vertices after stripping a tree "
                                   "(misclassified input?)");
        }
        return schedule;
    }

    // Walk the residual cycle from its lowest-id vertex. Every survivor must
    // have live degree exactly 2; the step rule picks the smallest eligible
    // neighbor, which fixes the direction on the first step.
    const std::size_t k = n - schedule.events.size();
    vertex start = 0;
    while (start < n && deg[start] == 0) ++start;
    if (start == static_cast<vertex>(n) || k < 3) {
        throw std::logic_error("strip: no residual cycle in a declared unicyclic graph");
    }

    schedule.cycle.reserve(k);
    vertex prev = kNone;
    vertex current = start;
    do {
        if (deg[current] != 2 || schedule.cycle.size() >= k) {
            throw std::logic_error("strip: residue is not a single cycle "
                                   "(misclassified input?)");
        }
        schedule.cycle.push_back(current);
        vertex next = kNone;
        for (vertex nb : g.neighbors(current)) {  // sorted, so first hit is smallest
            if (deg[nb] == 2 && nb != prev) {
                next = nb;
                break;
            }
        }
        if (next == kNone) {
            throw std::logic_error("strip: residual walk dead-ended "
                                   "(misclassified input?)");
        }
        prev = current;
        current = next;
    } while (current != start);

    if (schedule.cycle.size() != k) {
        throw std::logic_error("strip: residual walk closed early (misclassified input?)");
    }
    return schedule;
}

}  // namespace windex
