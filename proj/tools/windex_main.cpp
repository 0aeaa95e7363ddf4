// windex - Wiener, terminal Wiener and Wiener polarity indices of trees and
// unicyclic graphs, with definitional oracles and a timing harness.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "windex/bench.hpp"
#include "windex/graph.hpp"
#include "windex/oracles.hpp"
#include "windex/report.hpp"
#include "windex/verify.hpp"
#include "windex/wiener.hpp"

namespace {

// Fixed exit taxonomy so shell harnesses can assert failure modes.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDisconnected = 2;
constexpr int kExitUnsupportedClass = 3;
constexpr int kExitOverflow = 4;
constexpr int kExitVerifyMismatch = 5;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct ComputeOptions {
    std::string path;
    std::string format = "json";
    std::string algorithm = "lta";
    bool parallel_oracle = false;
};

struct GenerateOptions {
    std::string kind;
    std::size_t n = 0;
    std::uint64_t seed = 1;
};

struct BenchOptions {
    std::vector<std::size_t> sizes{10, 20, 50, 100, 1000};
    std::vector<std::string> algorithms{"sap", "fap", "fw", "bfs", "lta"};
    unsigned trials = 5;
    std::uint64_t seed = 1;
    bool unicyclic = false;
    bool pin = false;
    std::string out = "bench_report";
};

int run_compute(const ComputeOptions& opt) {
    std::ifstream in(opt.path);
    if (!in.is_open()) {
        std::cerr << "windex: cannot open '" << opt.path << "'\n";
        return kExitParse;
    }
    const windex::Graph g = windex::parse_edge_list(in);

    // Feasibility guardrails for the superlinear algorithms.
    const std::size_t n = g.vertex_count();
    if (opt.algorithm == "bfs" && n > windex::kBfsOracleMaxN) {
        std::cerr << "windex: n=" << n << " exceeds the bfs guardrail ("
                  << windex::kBfsOracleMaxN << ")\n";
        return kExitUsage;
    }
    if ((opt.algorithm == "fw" || opt.algorithm == "sap" || opt.algorithm == "fap") &&
        n > windex::kMatrixOracleMaxN) {
        std::cerr << "windex: n=" << n << " exceeds the " << opt.algorithm << " guardrail ("
                  << windex::kMatrixOracleMaxN << ")\n";
        return kExitUsage;
    }

    const unsigned threads =
        opt.parallel_oracle ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    const windex::IndexReport report = windex::compute_index_report(g, opt.algorithm, threads);
    std::cout << (opt.format == "text" ? windex::to_text(report)
                                       : windex::to_json(report) + "\n");
    return kExitOk;
}

int run_generate(const GenerateOptions& opt) {
    windex::Graph g;
    if (opt.kind == "path") {
        g = windex::make_path(opt.n);
    } else if (opt.kind == "star") {
        g = windex::make_star(opt.n);
    } else if (opt.kind == "cycle") {
        g = windex::make_cycle(opt.n);
    } else if (opt.kind == "random-tree") {
        g = windex::random_tree(opt.n, opt.seed);
    } else if (opt.kind == "random-unicyclic") {
        g = windex::random_unicyclic(opt.n, opt.seed);
    } else {
        std::cerr << "windex: unknown kind '" << opt.kind << "'\n";
        return kExitUsage;
    }
    std::cout << windex::to_edge_list(g);
    return kExitOk;
}

int run_verify(const windex::VerifyOptions& opt) {
    const windex::VerifyResult result = windex::verify_against_oracles(opt);
    std::cout << "checked " << result.trees_checked << " trees (exhaustive), "
              << result.unicyclic_checked << " unicyclic (exhaustive), "
              << result.random_checked << " random instances\n";
    if (result.pass) {
        std::cout << "PASS\n";
        return kExitOk;
    }
    std::cout << "FAIL: " << result.failure << "\ncounterexample edge list:\n"
              << result.counterexample_edge_list;
    return kExitVerifyMismatch;
}

int run_bench(const BenchOptions& opt) {
    windex::BenchConfig config;
    config.sizes = opt.sizes;
    for (const auto& name : opt.algorithms) {
        const auto algo = windex::bench_algo_from(name);
        if (!algo) {
            std::cerr << "windex: unknown algorithm '" << name << "'\n";
            return kExitUsage;
        }
        config.algorithms.push_back(*algo);
    }
    config.trials = opt.trials;
    config.seed = opt.seed;
    config.unicyclic = opt.unicyclic;
    config.pin = opt.pin;

    const windex::BenchReport report = windex::run_bench(config);
    const std::string csv_path = opt.out + ".csv";
    const std::string md_path = opt.out + ".md";
    {
        std::ofstream csv(csv_path);
        std::ofstream md(md_path);
        if (!csv.is_open() || !md.is_open()) {
            std::cerr << "windex: cannot write '" << csv_path << "' / '" << md_path << "'\n";
            return kExitIo;
        }
        csv << windex::to_csv(report);
        md << windex::to_markdown(report);
    }
    std::cout << windex::to_markdown(report) << "\nwrote " << csv_path << " and " << md_path
              << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wiener, terminal Wiener and Wiener polarity indices of acyclic and "
                 "unicyclic graphs in linear time, with exact oracles and benchmarks"};
    app.require_subcommand(1);
    app.fallthrough();

    ComputeOptions compute_opt;
    auto* compute = app.add_subcommand(
        "compute", "Compute all three indices of an edge-list file");
    compute->add_option("path", compute_opt.path, "edge-list file")->required();
    compute->add_option("--format", compute_opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    compute->add_option("--algorithm", compute_opt.algorithm, "computation path")
        ->check(CLI::IsMember({"lta", "bfs", "fw", "sap", "fap"}))
        ->capture_default_str();
    compute->add_flag("--parallel-oracle", compute_opt.parallel_oracle,
                      "spread oracle BFS sweeps over hardware threads");

    GenerateOptions generate_opt;
    auto* generate = app.add_subcommand("generate", "Emit a graph as an edge list");
    generate->add_option("kind", generate_opt.kind, "path|star|cycle|random-tree|random-unicyclic")
        ->required()
        ->check(CLI::IsMember({"path", "star", "cycle", "random-tree", "random-unicyclic"}));
    generate->add_option("n", generate_opt.n, "vertex count")->required();
    generate->add_option("--seed", generate_opt.seed, "PRNG seed")->capture_default_str();

    windex::VerifyOptions verify_opt;
    auto* verify = app.add_subcommand(
        "verify", "Check the stripping computations against the definitional oracles");
    verify->add_option("--n-max", verify_opt.n_max, "largest random instance size")
        ->check(CLI::Range(std::size_t{2}, windex::kBfsOracleMaxN))
        ->capture_default_str();
    verify->add_option("--instances", verify_opt.instances, "random instances per class")
        ->capture_default_str();
    verify->add_option("--seed", verify_opt.seed, "PRNG seed")->capture_default_str();
    verify->add_flag_callback(
        "--parallel-oracle",
        [&] { verify_opt.oracle_threads = std::max(1u, std::thread::hardware_concurrency()); },
        "spread oracle BFS sweeps over hardware threads");

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "Time SAP/FAP/FW/BFS/LTA on seeded random graphs");
    bench->add_option("--sizes", bench_opt.sizes, "graph sizes")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--algorithms", bench_opt.algorithms, "subset of sap,fap,fw,bfs,lta")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--trials", bench_opt.trials, "trials per cell (>= 3)")
        ->check(CLI::Range(3u, 1000u))
        ->capture_default_str();
    bench->add_option("--seed", bench_opt.seed, "base PRNG seed")->capture_default_str();
    bench->add_flag("--unicyclic", bench_opt.unicyclic, "time unicyclic graphs instead of trees");
    bench->add_flag("--pin", bench_opt.pin, "best-effort pin to one CPU");
    bench->add_option("--out", bench_opt.out, "report path prefix")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return run_compute(compute_opt);
        if (generate->parsed()) return run_generate(generate_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        if (bench->parsed()) return run_bench(bench_opt);
    } catch (const windex::parse_error& e) {
        std::cerr << "windex: " << e.what() << "\n";
        return kExitParse;
    } catch (const windex::disconnected_error& e) {
        std::cerr << "windex: " << e.what() << "\n";
        return kExitDisconnected;
    } catch (const windex::unsupported_class_error& e) {
        std::cerr << "windex: " << e.what() << "\n";
        return kExitUnsupportedClass;
    } catch (const windex::overflow_error& e) {
        std::cerr << "windex: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const std::invalid_argument& e) {
        std::cerr << "windex: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "windex: internal error: " << e.what() << "\n";
        return 70;
    }
    return kExitOk;
}
