#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "windex/graph.hpp"
#include "windex/oracles.hpp"
#include "windex/wiener.hpp"

namespace windex {

enum class BenchAlgo { sap, fap, fw, bfs, lta };

const char* to_string(BenchAlgo a);
std::optional<BenchAlgo> bench_algo_from(std::string_view name);

// Largest n the harness will time for an algorithm; beyond it the cell is
// reported as skipped, the way the slow columns go blank in practice.
std::size_t bench_size_cap(BenchAlgo a);

// One (algorithm, n) cell. Times come from `trials` runs on distinct seeded
// graphs; recorded at nanosecond resolution, reported in milliseconds.
struct BenchCell {
    BenchAlgo algo{};
    std::size_t n = 0;
    unsigned trials = 0;
    std::uint64_t seed = 0;
    bool skipped = false;
    std::string note;
    double median_ms = 0.0;
    double min_ms = 0.0;
    double max_ms = 0.0;
};

struct BenchConfig {
    std::vector<std::size_t> sizes;
    std::vector<BenchAlgo> algorithms;
    unsigned trials = 5;
    std::uint64_t seed = 1;
    bool unicyclic = false;  // time unicyclic graphs instead of trees
    bool pin = false;        // best-effort pin to one CPU while timing
};

struct BenchReport {
    BenchConfig config;
    std::string timestamp;
    std::vector<BenchCell> cells;

    const BenchCell* find(BenchAlgo a, std::size_t n) const;
};

// Times only the index computation: graph generation and classification stay
// outside the clock. Trial t at size n uses the graph seeded by
// mix_seed(seed, n, t), so every algorithm sees the same graphs. Each cell
// runs one untimed warm-up before its trials. Cells are never timed
// concurrently.
BenchReport run_bench(const BenchConfig& config);

// CSV: algorithm,n,trials,median_ms,min_ms,max_ms,seed. Skipped cells keep
// their row with empty time fields.
std::string to_csv(const BenchReport& report);

// Markdown table, one row per size and one column per algorithm; skipped
// cells are blank.
std::string to_markdown(const BenchReport& report);

inline constexpr double kLinearScalingMaxRatio = 30.0;

struct ScalingPair {
    std::size_t n_low = 0;
    std::size_t n_high = 0;
    double median_low_ms = 0.0;
    double median_high_ms = 0.0;
    double ratio = 0.0;
    bool pass = false;
};

struct ScalingVerdict {
    bool pass = false;
    std::vector<ScalingPair> pairs;
};

// Examines every LTA size pair (n, 10n) in the report; a pair passes when the
// median grows by at most kLinearScalingMaxRatio. Throws std::invalid_argument
// when no such pair exists.
ScalingVerdict check_linear_scaling(const BenchReport& report);

}  // namespace windex
