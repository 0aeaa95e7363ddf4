#include "windex/bench.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <limits>
#include <map>
#include <stdexcept>

#include "windex/rng.hpp"
#include "windex/strip.hpp"

#ifdef __linux__
#include <sched.h>
#endif

namespace windex {

const char* to_string(BenchAlgo a) {
    switch (a) {
        case BenchAlgo::sap: return "SAP";
        case BenchAlgo::fap: return "FAP";
        case BenchAlgo::fw: return "FW";
        case BenchAlgo::bfs: return "BFS";
        default: return "LTA";
    }
}

std::optional<BenchAlgo> bench_algo_from(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "sap") return BenchAlgo::sap;
    if (lower == "fap") return BenchAlgo::fap;
    if (lower == "fw") return BenchAlgo::fw;
    if (lower == "bfs") return BenchAlgo::bfs;
    if (lower == "lta") return BenchAlgo::lta;
    return std::nullopt;
}

std::size_t bench_size_cap(BenchAlgo a) {
    switch (a) {
        case BenchAlgo::sap:
        case BenchAlgo::fap:
        case BenchAlgo::fw: return kMatrixOracleMaxN;
        case BenchAlgo::bfs: return kBfsOracleMaxN;
        default: return kIndexSafeMaxN;
    }
}

const BenchCell* BenchReport::find(BenchAlgo a, std::size_t n) const {
    for (const auto& cell : cells) {
        if (cell.algo == a && cell.n == n) return &cell;
    }
    return nullptr;
}

namespace {

void pin_to_one_cpu() {
#ifdef __linux__
    cpu_set_t set;
    CPU_ZERO(&set);
    CPU_SET(0, &set);
    (void)sched_setaffinity(0, sizeof(set), &set);  // best effort
#endif
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

index_value timed_wiener(BenchAlgo algo, const Graph& g, GraphClass cls, std::uint64_t& out_ns) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    index_value w = 0;
    switch (algo) {
        case BenchAlgo::lta: w = wiener(g, cls); break;
        case BenchAlgo::bfs: w = oracle_wiener(g, 1); break;
        case BenchAlgo::fw: w = wiener_from_matrix(floyd_warshall(g)); break;
        case BenchAlgo::sap: w = wiener_from_matrix(sap_distances(g)); break;
        case BenchAlgo::fap: w = wiener_from_matrix(fap_distances(g)); break;
    }
    const auto t1 = clock::now();
    out_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    return w;
}

double median_of(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t mid = xs.size() / 2;
    return xs.size() % 2 == 1 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2.0;
}

std::string format_ms(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", ms);
    return buf;
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
    if (config.sizes.empty() || config.algorithms.empty()) {
        throw std::invalid_argument("run_bench: need at least one size and one algorithm");
    }
    if (config.trials < 3) {
        throw std::invalid_argument("run_bench: need at least 3 trials");
    }
    if (config.pin) pin_to_one_cpu();

    BenchReport report;
    report.config = config;
    report.timestamp = utc_timestamp();

    // Every algorithm that handles a given (n, trial) graph must produce the
    // same Wiener index; any disagreement is a bug worth aborting for.
    std::map<std::pair<std::size_t, unsigned>, index_value> expected;

    for (const std::size_t n : config.sizes) {
        for (const BenchAlgo algo : config.algorithms) {
            BenchCell cell;
            cell.algo = algo;
            cell.n = n;
            cell.seed = config.seed;

            const std::size_t cap = bench_size_cap(algo);
            if (n > cap) {
                cell.skipped = true;
                cell.note = std::string("n exceeds ") + to_string(algo) + " cap " +
                            std::to_string(cap);
                report.cells.push_back(std::move(cell));
                continue;
            }
            if (config.unicyclic && n < 3) {
                cell.skipped = true;
                cell.note = "unicyclic graphs need n >= 3";
                report.cells.push_back(std::move(cell));
                continue;
            }

            {
                // one untimed warm-up per cell, same for every algorithm
                const std::uint64_t warm_seed = mix_seed(config.seed, n, config.trials);
                const Graph g = config.unicyclic ? random_unicyclic(n, warm_seed)
                                                 : random_tree(n, warm_seed);
                std::uint64_t ns = 0;
                (void)timed_wiener(algo, g, classify(g), ns);
            }

            std::vector<double> ms;
            ms.reserve(config.trials);
            for (unsigned t = 0; t < config.trials; ++t) {
                const std::uint64_t graph_seed = mix_seed(config.seed, n, t);
                const Graph g = config.unicyclic ? random_unicyclic(n, graph_seed)
                                                 : random_tree(n, graph_seed);
                const GraphClass cls = classify(g);
                std::uint64_t ns = 0;
                const index_value w = timed_wiener(algo, g, cls, ns);
                ms.push_back(static_cast<double>(ns) / 1e6);

                const auto key = std::make_pair(n, t);
                const auto [it, inserted] = expected.emplace(key, w);
                if (!inserted && it->second != w) {
                    throw std::logic_error(std::string("run_bench: ") + to_string(algo) +
                                           " disagrees on W at n=" + std::to_string(n) +
                                           " trial " + std::to_string(t));
                }
            }
            cell.trials = config.trials;
            cell.median_ms = median_of(ms);
            cell.min_ms = *std::min_element(ms.begin(), ms.end());
            cell.max_ms = *std::max_element(ms.begin(), ms.end());
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

std::string to_csv(const BenchReport& report) {
    std::string out = "algorithm,n,trials,median_ms,min_ms,max_ms,seed\n";
    for (const auto& cell : report.cells) {
        out += to_string(cell.algo);
        out += ',';
        out += std::to_string(cell.n);
        out += ',';
        out += std::to_string(cell.trials);
        out += ',';
        if (!cell.skipped) {
            out += format_ms(cell.median_ms);
            out += ',';
            out += format_ms(cell.min_ms);
            out += ',';
            out += format_ms(cell.max_ms);
        } else {
            out += ",,";
        }
        out += ',';
        out += std::to_string(cell.seed);
        out += '\n';
    }
    return out;
}

std::string to_markdown(const BenchReport& report) {
    std::string out = "# Wiener index timing\n\n";
    out += "- generated: " + report.timestamp + "\n";
    out += "- graphs: seeded random " +
           std::string(report.config.unicyclic ? "unicyclic graphs" : "trees") +
           ", base seed " + std::to_string(report.config.seed) + " (trial t at size n uses seed mix(seed, n, t))\n";
    out += "- trials per cell: " + std::to_string(report.config.trials) +
           "; cells report the median in milliseconds\n\n";

    out += "| n |";
    for (const BenchAlgo a : report.config.algorithms) {
        out += ' ';
        out += to_string(a);
        out += " |";
    }
    out += "\n|--:|";
    for (std::size_t i = 0; i < report.config.algorithms.size(); ++i) out += "--:|";
    out += '\n';

    bool any_skipped = false;
    for (const std::size_t n : report.config.sizes) {
        out += "| " + std::to_string(n) + " |";
        for (const BenchAlgo a : report.config.algorithms) {
            const BenchCell* cell = report.find(a, n);
            if (cell != nullptr && !cell->skipped) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), " %.5g |", cell->median_ms);
                out += buf;
            } else {
                out += "  |";
                any_skipped = true;
            }
        }
        out += '\n';
    }
    if (any_skipped) {
        out += "\nBlank cells were skipped: the size exceeds that algorithm's cap (SAP/FAP/FW " +
               std::to_string(kMatrixOracleMaxN) + ", BFS " + std::to_string(kBfsOracleMaxN) +
               ", LTA " + std::to_string(kIndexSafeMaxN) + ").\n";
    }
    return out;
}

ScalingVerdict check_linear_scaling(const BenchReport& report) {
    std::map<std::size_t, double> medians;
    for (const auto& cell : report.cells) {
        if (cell.algo == BenchAlgo::lta && !cell.skipped) medians[cell.n] = cell.median_ms;
    }

    ScalingVerdict verdict;
    verdict.pass = true;
    for (const auto& [n, low_ms] : medians) {
        const auto high = medians.find(n * 10);
        if (high == medians.end()) continue;
        ScalingPair pair;
        pair.n_low = n;
        pair.n_high = n * 10;
        pair.median_low_ms = low_ms;
        pair.median_high_ms = high->second;
        pair.ratio = low_ms > 0.0 ? high->second / low_ms
                                  : (high->second > 0.0 ? std::numeric_limits<double>::infinity()
                                                        : 1.0);
        pair.pass = pair.ratio <= kLinearScalingMaxRatio;
        verdict.pass = verdict.pass && pair.pass;
        verdict.pairs.push_back(pair);
    }
    if (verdict.pairs.empty()) {
        throw std::invalid_argument("check_linear_scaling: report lacks LTA medians at any pair n, 10n");
    }
    return verdict;
}

}  // namespace windex
