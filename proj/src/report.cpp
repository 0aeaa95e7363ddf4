#include "windex/report.hpp"

#include <chrono>
#include <stdexcept>

#include "json.hpp"

#include "windex/oracles.hpp"
#include "windex/polarity.hpp"
#include "windex/strip.hpp"
#include "windex/terminal_wiener.hpp"

namespace windex {

IndexReport compute_index_report(const Graph& g, const std::string& algorithm,
                                 unsigned oracle_threads) {
    IndexReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.graph_class = classify(g);
    r.algorithm = algorithm;

    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    if (algorithm == "lta") {
        const StripSchedule schedule = strip(g, r.graph_class);
        r.wiener_index = wiener(g, r.graph_class, schedule);
        r.terminal_index = terminal_wiener(g, r.graph_class, schedule);
        r.polarity_index = wiener_polarity(g, r.graph_class, schedule);
    } else if (algorithm == "bfs") {
        r.wiener_index = oracle_wiener(g, oracle_threads);
        r.terminal_index = oracle_terminal(g, oracle_threads);
        r.polarity_index = oracle_polarity(g, oracle_threads);
    } else if (algorithm == "fw" || algorithm == "sap" || algorithm == "fap") {
        const DistanceMatrix m = algorithm == "fw"    ? floyd_warshall(g)
                                 : algorithm == "sap" ? sap_distances(g)
                                                      : fap_distances(g);
        r.wiener_index = wiener_from_matrix(m);
        r.terminal_index = terminal_from_matrix(g, m);
        r.polarity_index = polarity_from_matrix(m);
    } else {
        throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
    }
    const auto t1 = clock::now();
    r.elapsed_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    return r;
}

std::string to_json(const IndexReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["class"] = to_string(r.graph_class);
    j["wiener"] = r.wiener_index;
    j["terminal_wiener"] = r.terminal_index;
    j["wiener_polarity"] = r.polarity_index;
    j["algorithm"] = r.algorithm;
    j["elapsed_ns"] = r.elapsed_ns;
    return j.dump();
}

std::string to_text(const IndexReport& r) {
    std::string out;
    out += "n: " + std::to_string(r.n) + '\n';
    out += "m: " + std::to_string(r.m) + '\n';
    out += "class: " + std::string(to_string(r.graph_class)) + '\n';
    out += "wiener: " + std::to_string(r.wiener_index) + '\n';
    out += "terminal_wiener: " + std::to_string(r.terminal_index) + '\n';
    out += "wiener_polarity: " + std::to_string(r.polarity_index) + '\n';
    out += "algorithm: " + r.algorithm + '\n';
    out += "elapsed_ns: " + std::to_string(r.elapsed_ns) + '\n';
    return out;
}

}  // namespace windex
