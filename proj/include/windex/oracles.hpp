#pragma once

#include <cstdint>
#include <vector>

#include "windex/checked.hpp"
#include "windex/graph.hpp"

namespace windex {

// CLI guardrails: the definitional oracles are superlinear by design, so the
// front end refuses sizes where they stop being practical.
inline constexpr std::size_t kBfsOracleMaxN = 20'000;     // O(n*m) sweeps
inline constexpr std::size_t kMatrixOracleMaxN = 1'500;   // cubic and quartic algorithms

// Hop-count sentinel for unreachable pairs. Chosen so that two sentinels can
// be added in 32 bits without wrapping, which the min-plus kernels rely on.
inline constexpr std::uint32_t kUnreachable = 0x3fffffff;

// Symmetric all-pairs hop-count matrix with zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix(std::size_t n, std::uint32_t fill) : n_(n), d_(n * n, fill) {}

    std::size_t size() const noexcept { return n_; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    std::uint32_t& at(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }

    const std::uint32_t* row(std::size_t i) const { return d_.data() + i * n_; }
    std::uint32_t* row(std::size_t i) { return d_.data() + i * n_; }

    bool operator==(const DistanceMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<std::uint32_t> d_;
};

// Single-source breadth-first hop counts; kUnreachable where no path exists.
std::vector<std::uint32_t> bfs_distances(const Graph& g, vertex source);

// n breadth-first sweeps assembled into a matrix.
DistanceMatrix bfs_all_pairs(const Graph& g);

// Classical Theta(n^3) all-pairs relaxation.
DistanceMatrix floyd_warshall(const Graph& g);

// Min-plus matrix-product APSP: repeated extension by one edge (Theta(n^4)
// worst case) and repeated doubling (Theta(n^3 log n)). Both stop early once
// the distances reach a fixed point.
DistanceMatrix sap_distances(const Graph& g);
DistanceMatrix fap_distances(const Graph& g);

// Index values derived from a full distance matrix. wiener_from_matrix
// throws disconnected_error when an off-diagonal entry is unreachable.
index_value wiener_from_matrix(const DistanceMatrix& m);
index_value terminal_from_matrix(const Graph& g, const DistanceMatrix& m);
index_value polarity_from_matrix(const DistanceMatrix& m);

// Definitional ground truth from per-source BFS sweeps, O(n*m) total, without
// materializing a matrix. threads > 1 distributes the sources; the partial
// sums combine by plain addition, so the result is identical either way.
index_value oracle_wiener(const Graph& g, unsigned threads = 1);
index_value oracle_terminal(const Graph& g, unsigned threads = 1);
index_value oracle_polarity(const Graph& g, unsigned threads = 1);

}  // namespace windex
