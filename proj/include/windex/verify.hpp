#pragma once

#include <cstdint>
#include <string>

namespace windex {

struct VerifyOptions {
    std::size_t n_max = 60;      // exhaustive sweeps are capped internally (8 / 7)
    std::size_t instances = 200; // random trees and random unicyclic graphs, each
    std::uint64_t seed = 1;
    unsigned oracle_threads = 1;
};

struct VerifyResult {
    bool pass = true;
    std::size_t trees_checked = 0;
    std::size_t unicyclic_checked = 0;
    std::size_t random_checked = 0;
    std::string failure;                   // empty on pass
    std::string counterexample_edge_list;  // reproducible input on failure
};

// Checks the stripping computations of all three indices against the
// definitional BFS oracles: exhaustively over all labeled trees with
// n <= min(n_max, 8), exhaustively over every such tree on n <= min(n_max, 7)
// plus each possible extra edge, then over seeded random trees and unicyclic
// graphs with n up to n_max. Stops at the first counterexample.
VerifyResult verify_against_oracles(const VerifyOptions& options);

}  // namespace windex
