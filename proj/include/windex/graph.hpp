#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "windex/errors.hpp"

namespace windex {

using vertex = std::uint32_t;

// Highest vertex id accepted by the edge-list parser by default.
inline constexpr vertex kDefaultMaxVertexId = 0x7fffffff;

// Immutable undirected simple graph in compressed adjacency-array form.
// Vertex ids are exactly 0..n-1; neighbor lists are sorted ascending, so the
// structure is canonical regardless of edge input order. Safe to share across
// threads once constructed.
class Graph {
public:
    Graph() = default;

    // Builds and validates. Rejects out-of-range endpoints, self-loops and
    // duplicate edges (the degree arithmetic downstream breaks on multigraphs).
    static Graph from_edges(std::size_t n, std::span<const std::pair<vertex, vertex>> edges);

    std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const vertex> neighbors(vertex v) const {
        return {flat_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    std::size_t degree(vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(vertex u, vertex v) const;

    // Edges as (u, v) with u < v, lexicographically ordered.
    std::vector<std::pair<vertex, vertex>> edges() const;

private:
    std::vector<std::size_t> offsets_{0};  // n+1 entries
    std::vector<vertex> flat_;             // 2m entries
    std::size_t edge_count_ = 0;
};

enum class GraphClass { tree, unicyclic };

const char* to_string(GraphClass c);

// Reads the "u v" edge-list format: one edge per line, arbitrary whitespace,
// '#' starts a comment line, blank lines are ignored. n is inferred as
// 1 + max vertex id (0 for empty input). Throws parse_error with a line number
// on malformed tokens, ids above max_id, self-loops and duplicate edges.
Graph parse_edge_list(std::istream& in, vertex max_id = kDefaultMaxVertexId);
Graph parse_edge_list(std::string_view text, vertex max_id = kDefaultMaxVertexId);

// Canonical serialization of the same format: "u v" with u < v, sorted.
// Inverse of parse_edge_list for every graph without isolated vertices.
std::string to_edge_list(const Graph& g);

// Tree iff connected with m = n-1; unicyclic iff connected with m = n.
// Throws disconnected_error or unsupported_class_error (m > n) otherwise;
// an empty graph reports as disconnected.
GraphClass classify(const Graph& g);

// Canonical labeled families.
Graph make_path(std::size_t n);   // 0-1-...-(n-1), n >= 1
Graph make_star(std::size_t n);   // center 0, n >= 1
Graph make_cycle(std::size_t k);  // 0-1-...-(k-1)-0, k >= 3

// Uniform random labeled tree via a random Pruefer sequence; deterministic
// for a fixed seed. n >= 1.
Graph random_tree(std::size_t n, std::uint64_t seed);

// random_tree(n, seed) plus one uniformly chosen non-edge. n >= 3.
Graph random_unicyclic(std::size_t n, std::uint64_t seed);

// Visits all n^(n-2) labeled trees on n vertices in Pruefer order. n in 1..9.
void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& fn);

}  // namespace windex
