#include "windex/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "windex/rng.hpp"

namespace windex {

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<vertex, vertex>> edges) {
    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw parse_error("edge endpoint " + std::to_string(std::max(u, v)) +
                              " out of range for n=" + std::to_string(n));
        }
        if (u == v) {
            throw parse_error("self-loop at vertex " + std::to_string(u));
        }
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];

    g.flat_.resize(2 * edges.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.flat_[cursor[u]++] = v;
        g.flat_[cursor[v]++] = u;
    }
    for (vertex v = 0; v < n; ++v) {
        const auto first = g.flat_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        const auto last = g.flat_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        const auto dup = std::adjacent_find(first, last);
        if (dup != last) {
            throw parse_error("duplicate edge " + std::to_string(v) + " " + std::to_string(*dup));
        }
    }
    g.edge_count_ = edges.size();
    return g;
}

bool Graph::has_edge(vertex u, vertex v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<vertex, vertex>> Graph::edges() const {
    std::vector<std::pair<vertex, vertex>> out;
    out.reserve(edge_count_);
    for (vertex v = 0; v < vertex_count(); ++v) {
        for (vertex w : neighbors(v)) {
            if (w > v) out.emplace_back(v, w);
        }
    }
    return out;
}

const char* to_string(GraphClass c) {
    return c == GraphClass::tree ? "tree" : "unicyclic";
}

namespace {

// Parses one base-10 vertex id; the whole token must be digits.
vertex parse_vertex_token(std::string_view token, vertex max_id, std::size_t line_no) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw parse_error("line " + std::to_string(line_no) + ": malformed token '" +
                          std::string(token) + "'");
    }
    if (value > max_id) {
        throw parse_error("line " + std::to_string(line_no) + ": vertex id " +
                          std::to_string(value) + " exceeds maximum " + std::to_string(max_id));
    }
    return static_cast<vertex>(value);
}

}  // namespace

Graph parse_edge_list(std::istream& in, vertex max_id) {
    std::vector<std::pair<vertex, vertex>> edges;
    std::uint64_t max_seen = 0;
    bool any = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t pos = line.find_first_not_of(" \t\r\f\v");
        if (pos == std::string::npos || line[pos] == '#') continue;

        std::string_view rest(line);
        std::vector<std::string_view> tokens;
        while (pos != std::string::npos) {
            std::size_t end = rest.find_first_of(" \t\r\f\v", pos);
            if (end == std::string::npos) end = rest.size();
            tokens.push_back(rest.substr(pos, end - pos));
            pos = rest.find_first_not_of(" \t\r\f\v", end);
        }
        if (tokens.size() != 2) {
            throw parse_error("line " + std::to_string(line_no) + ": expected 'u v', got " +
                              std::to_string(tokens.size()) + " token(s)");
        }
        const vertex u = parse_vertex_token(tokens[0], max_id, line_no);
        const vertex v = parse_vertex_token(tokens[1], max_id, line_no);
        if (u == v) {
            throw parse_error("line " + std::to_string(line_no) + ": self-loop at vertex " +
                              std::to_string(u));
        }
        edges.emplace_back(u, v);
        max_seen = std::max<std::uint64_t>(max_seen, std::max(u, v));
        any = true;
    }
    const std::size_t n = any ? static_cast<std::size_t>(max_seen) + 1 : 0;
    return Graph::from_edges(n, edges);
}

Graph parse_edge_list(std::string_view text, vertex max_id) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in, max_id);
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (vertex v = 0; v < g.vertex_count(); ++v) {
        for (vertex w : g.neighbors(v)) {
            if (w > v) {
                out += std::to_string(v);
                out += ' ';
                out += std::to_string(w);
                out += '\n';
            }
        }
    }
    return out;
}

GraphClass classify(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw disconnected_error("empty graph");

    // Iterative BFS from vertex 0.
    std::vector<char> seen(n, 0);
    std::vector<vertex> queue;
    queue.reserve(n);
    queue.push_back(0);
    seen[0] = 1;
    std::size_t visited = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (vertex w : g.neighbors(queue[head])) {
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                queue.push_back(w);
            }
        }
    }
    if (visited != n) {
        throw disconnected_error("graph is disconnected (" + std::to_string(visited) + " of " +
                                 std::to_string(n) + " vertices reachable from 0)");
    }
    const std::size_t m = g.edge_count();
    if (m == n - 1) return GraphClass::tree;
    if (m == n) return GraphClass::unicyclic;
    throw unsupported_class_error("connected graph with n=" + std::to_string(n) +
                                  ", m=" + std::to_string(m) + " has more than one cycle");
}

Graph make_path(std::size_t n) {
    if (n < 1) throw std::invalid_argument("make_path: n must be >= 1");
    std::vector<std::pair<vertex, vertex>> edges;
    edges.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.emplace_back(static_cast<vertex>(i), static_cast<vertex>(i + 1));
    }
    return Graph::from_edges(n, edges);
}

Graph make_star(std::size_t n) {
    if (n < 1) throw std::invalid_argument("make_star: n must be >= 1");
    std::vector<std::pair<vertex, vertex>> edges;
    edges.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        edges.emplace_back(0, static_cast<vertex>(i));
    }
    return Graph::from_edges(n, edges);
}

Graph make_cycle(std::size_t k) {
    if (k < 3) throw std::invalid_argument("make_cycle: k must be >= 3");
    std::vector<std::pair<vertex, vertex>> edges;
    edges.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        edges.emplace_back(static_cast<vertex>(i), static_cast<vertex>((i + 1) % k));
    }
    return Graph::from_edges(k, edges);
}

namespace {

// Standard linear-time Pruefer decode; the sequence/tree correspondence is a
// bijection, which the enumeration below relies on.
std::vector<std::pair<vertex, vertex>> decode_pruefer(std::size_t n, std::span<const vertex> seq) {
    std::vector<std::uint32_t> deg(n, 1);
    for (vertex x : seq) ++deg[x];

    std::vector<std::pair<vertex, vertex>> edges;
    edges.reserve(n - 1);
    vertex ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    vertex leaf = ptr;
    for (vertex x : seq) {
        edges.emplace_back(leaf, x);
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, static_cast<vertex>(n - 1));
    return edges;
}

std::vector<std::pair<vertex, vertex>> random_tree_edges(std::size_t n, SeededRng& rng) {
    if (n <= 1) return {};
    if (n == 2) return {{0, 1}};
    std::vector<vertex> seq(n - 2);
    for (auto& x : seq) x = static_cast<vertex>(rng.below(n));
    return decode_pruefer(n, seq);
}

}  // namespace

Graph random_tree(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    SeededRng rng(seed);
    return Graph::from_edges(n, random_tree_edges(n, rng));
}

Graph random_unicyclic(std::size_t n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_unicyclic: n must be >= 3");
    SeededRng rng(seed);
    auto edges = random_tree_edges(n, rng);
    const Graph tree = Graph::from_edges(n, edges);
    // Rejection draw over unordered pairs; a tree has only n-1 of the
    // n(n-1)/2 pairs occupied, so this terminates quickly.
    for (;;) {
        const auto u = static_cast<vertex>(rng.below(n));
        const auto v = static_cast<vertex>(rng.below(n));
        if (u == v || tree.has_edge(u, v)) continue;
        edges.emplace_back(u, v);
        break;
    }
    return Graph::from_edges(n, edges);
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 9) {
        throw std::invalid_argument("for_each_labeled_tree: n must be in 1..9");
    }
    if (n == 1) {
        fn(Graph::from_edges(1, {}));
        return;
    }
    std::vector<vertex> seq(n - 2, 0);
    for (;;) {
        fn(Graph::from_edges(n, decode_pruefer(n, seq)));
        // Odometer over base-n sequences.
        std::size_t pos = 0;
        while (pos < seq.size() && ++seq[pos] == n) {
            seq[pos] = 0;
            ++pos;
        }
        if (pos == seq.size()) break;
    }
}

}  // namespace windex
