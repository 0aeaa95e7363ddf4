#pragma once

#include <cstdint>
#include <string>

#include "windex/graph.hpp"
#include "windex/wiener.hpp"

namespace windex {

// The three index values for one graph plus run metadata.
struct IndexReport {
    std::size_t n = 0;
    std::size_t m = 0;
    GraphClass graph_class = GraphClass::tree;
    index_value wiener_index = 0;
    index_value terminal_index = 0;
    index_value polarity_index = 0;
    std::string algorithm = "lta";
    std::uint64_t elapsed_ns = 0;
};

// Classifies g and computes all three indices with the named algorithm:
//   "lta"            one strip schedule shared across the three folds
//   "bfs"            definitional per-source sweeps
//   "fw","sap","fap" one distance matrix, all three sums derived from it
// elapsed_ns covers the computation only (classification and parsing are
// outside the clock). Throws std::invalid_argument for unknown names.
IndexReport compute_index_report(const Graph& g, const std::string& algorithm,
                                 unsigned oracle_threads = 1);

// One-line JSON with a fixed key order; integers unquoted.
std::string to_json(const IndexReport& r);

// "key: value" lines in the same order.
std::string to_text(const IndexReport& r);

}  // namespace windex
