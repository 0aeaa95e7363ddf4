#include "windex/oracles.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace windex {

namespace {

void bfs_into(const Graph& g, vertex source, std::vector<std::uint32_t>& dist,
              std::vector<vertex>& queue) {
    dist.assign(g.vertex_count(), kUnreachable);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const vertex v = queue[head];
        const std::uint32_t dv = dist[v];
        for (vertex w : g.neighbors(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dv + 1;
                queue.push_back(w);
            }
        }
    }
}

void ensure_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw disconnected_error("empty graph");
    std::vector<std::uint32_t> dist;
    std::vector<vertex> queue;
    bfs_into(g, 0, dist, queue);
    if (queue.size() != n) {
        throw disconnected_error("graph is disconnected (" + std::to_string(queue.size()) +
                                 " of " + std::to_string(n) + " vertices reachable from 0)");
    }
}

// Sweeps all sources, each worker with its own BFS scratch, and combines the
// per-source values by checked addition. The combination is commutative, so
// the thread count never changes the result.
template <typename PerSource>
index_value sweep_sources(const Graph& g, unsigned threads, PerSource per_source) {
    const std::size_t n = g.vertex_count();
    const unsigned worker_count =
        static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1u), n));

    if (worker_count <= 1) {
        std::vector<std::uint32_t> dist;
        std::vector<vertex> queue;
        index_value total = 0;
        for (vertex v = 0; v < n; ++v) {
            total = checked_add(total, per_source(v, dist, queue));
        }
        return total;
    }

    std::vector<index_value> partial(worker_count, 0);
    std::vector<std::exception_ptr> failure(worker_count);
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
        pool.emplace_back([&, w] {
            try {
                std::vector<std::uint32_t> dist;
                std::vector<vertex> queue;
                const vertex lo = static_cast<vertex>(n * w / worker_count);
                const vertex hi = static_cast<vertex>(n * (w + 1) / worker_count);
                index_value local = 0;
                for (vertex v = lo; v < hi; ++v) {
                    local = checked_add(local, per_source(v, dist, queue));
                }
                partial[w] = local;
            } catch (...) {
                failure[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& f : failure) {
        if (f) std::rethrow_exception(f);
    }
    index_value total = 0;
    for (index_value p : partial) total = checked_add(total, p);
    return total;
}

DistanceMatrix one_edge_matrix(const Graph& g) {
    const std::size_t n = g.vertex_count();
    DistanceMatrix w(n, kUnreachable);
    for (std::size_t i = 0; i < n; ++i) w.at(i, i) = 0;
    for (vertex v = 0; v < n; ++v) {
        for (vertex nb : g.neighbors(v)) w.at(v, nb) = 1;
    }
    return w;
}

// out = min-plus product a (x) b. Unreachable saturates: the sentinel is low
// enough that sentinel + sentinel does not wrap 32 bits. The inner loop is an
// unconditional min-store so it vectorizes.
void min_plus(const DistanceMatrix& a, const DistanceMatrix& b, DistanceMatrix& out) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t* const __restrict oi = out.row(i);
        std::fill(oi, oi + n, kUnreachable);
        const std::uint32_t* ai = a.row(i);
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint32_t aik = ai[k];
            if (aik >= kUnreachable) continue;
            const std::uint32_t* const __restrict bk = b.row(k);
            for (std::size_t j = 0; j < n; ++j) {
                oi[j] = std::min(oi[j], aik + bk[j]);
            }
        }
    }
}

}  // namespace

std::vector<std::uint32_t> bfs_distances(const Graph& g, vertex source) {
    std::vector<std::uint32_t> dist;
    std::vector<vertex> queue;
    bfs_into(g, source, dist, queue);
    return dist;
}

DistanceMatrix bfs_all_pairs(const Graph& g) {
    const std::size_t n = g.vertex_count();
    DistanceMatrix m(n, kUnreachable);
    std::vector<std::uint32_t> dist;
    std::vector<vertex> queue;
    for (vertex v = 0; v < n; ++v) {
        bfs_into(g, v, dist, queue);
        std::copy(dist.begin(), dist.end(), m.row(v));
    }
    return m;
}

DistanceMatrix floyd_warshall(const Graph& g) {
    const std::size_t n = g.vertex_count();
    DistanceMatrix d = one_edge_matrix(g);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint32_t* dk = d.row(k);
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t dik = d.at(i, k);
            if (dik >= kUnreachable) continue;
            std::uint32_t* di = d.row(i);
            for (std::size_t j = 0; j < n; ++j) {
                const std::uint32_t cand = dik + dk[j];
                if (cand < di[j]) di[j] = cand;
            }
        }
    }
    return d;
}

DistanceMatrix sap_distances(const Graph& g) {
    const std::size_t n = g.vertex_count();
    DistanceMatrix base = one_edge_matrix(g);
    if (n <= 2) return base;
    DistanceMatrix current = base;
    DistanceMatrix next(n, kUnreachable);
    // current holds paths of at most t+1 edges; n-2 extensions reach n-1.
    // Stopping at the fixed point only skips products that cannot change
    // anything further.
    for (std::size_t t = 0; t + 2 < n; ++t) {
        min_plus(current, base, next);
        if (next == current) break;
        std::swap(current, next);
    }
    return current;
}

DistanceMatrix fap_distances(const Graph& g) {
    const std::size_t n = g.vertex_count();
    DistanceMatrix current = one_edge_matrix(g);
    if (n <= 2) return current;
    DistanceMatrix next(n, kUnreachable);
    std::size_t reach = 1;  // current covers paths of at most `reach` edges
    while (reach + 1 < n) {
        min_plus(current, current, next);
        reach *= 2;
        if (next == current) break;
        std::swap(current, next);
    }
    return current;
}

index_value wiener_from_matrix(const DistanceMatrix& m) {
    const std::size_t n = m.size();
    index_value total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint32_t d = m.at(i, j);
            if (d >= kUnreachable) {
                throw disconnected_error("distance matrix has unreachable pairs");
            }
            total = checked_add(total, d);
        }
    }
    return total;
}

index_value terminal_from_matrix(const Graph& g, const DistanceMatrix& m) {
    std::vector<vertex> pendants;
    for (vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1) pendants.push_back(v);
    }
    index_value total = 0;
    for (std::size_t a = 0; a < pendants.size(); ++a) {
        for (std::size_t b = a + 1; b < pendants.size(); ++b) {
            const std::uint32_t d = m.at(pendants[a], pendants[b]);
            if (d >= kUnreachable) {
                throw disconnected_error("distance matrix has unreachable pendant pairs");
            }
            total = checked_add(total, d);
        }
    }
    return total;
}

index_value polarity_from_matrix(const DistanceMatrix& m) {
    const std::size_t n = m.size();
    index_value total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m.at(i, j) == 3) total = checked_add(total, 1);
        }
    }
    return total;
}

index_value oracle_wiener(const Graph& g, unsigned threads) {
    ensure_connected(g);
    const index_value both_directions = sweep_sources(
        g, threads,
        [&g](vertex v, std::vector<std::uint32_t>& dist, std::vector<vertex>& queue) {
            bfs_into(g, v, dist, queue);
            index_value row = 0;
            for (std::uint32_t d : dist) row = checked_add(row, d);
            return row;
        });
    return both_directions / 2;
}

index_value oracle_terminal(const Graph& g, unsigned threads) {
    ensure_connected(g);
    std::vector<char> pendant(g.vertex_count(), 0);
    for (vertex v = 0; v < g.vertex_count(); ++v) pendant[v] = g.degree(v) == 1;
    return sweep_sources(
        g, threads,
        [&g, &pendant](vertex v, std::vector<std::uint32_t>& dist, std::vector<vertex>& queue) {
            if (!pendant[v]) return index_value{0};
            bfs_into(g, v, dist, queue);
            index_value row = 0;
            for (vertex w = v + 1; w < g.vertex_count(); ++w) {
                if (pendant[w]) row = checked_add(row, dist[w]);
            }
            return row;
        });
}

index_value oracle_polarity(const Graph& g, unsigned threads) {
    ensure_connected(g);
    return sweep_sources(
        g, threads,
        [&g](vertex v, std::vector<std::uint32_t>& dist, std::vector<vertex>& queue) {
            bfs_into(g, v, dist, queue);
            index_value row = 0;
            for (vertex w = v + 1; w < g.vertex_count(); ++w) {
                if (dist[w] == 3) ++row;
            }
            return row;
        });
}

}  // namespace windex
