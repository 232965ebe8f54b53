#include "vulngraph/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>

namespace vulngraph {

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

// Reusable BFS state; `depth` holds kUnseen for vertices not yet reached.
struct BfsWorkspace {
    std::vector<std::uint32_t> depth;
    std::vector<Vertex> queue;

    explicit BfsWorkspace(std::size_t n) : depth(n, kUnseen), queue(n) {}

    // Returns the number of vertices reached (including the source).
    std::size_t run(const Graph& g, Vertex source) {
        std::fill(depth.begin(), depth.end(), kUnseen);
        std::size_t head = 0;
        std::size_t tail = 0;
        depth[source] = 0;
        queue[tail++] = source;
        while (head < tail) {
            const Vertex u = queue[head++];
            const std::uint32_t next = depth[u] + 1;
            for (Vertex w : g.neighbors(u)) {
                if (depth[w] == kUnseen) {
                    depth[w] = next;
                    queue[tail++] = w;
                }
            }
        }
        return tail;
    }
};

struct PartialSummary {
    std::vector<std::uint64_t> ordered_counts;
    bool all_reach_everything = true;
};

void summarize_sources(const Graph& g, Vertex first, Vertex last, PartialSummary& part,
                       std::vector<Distance>& ecc) {
    const std::size_t n = g.order();
    BfsWorkspace ws(n);
    for (Vertex s = first; s < last; ++s) {
        const std::size_t reached = ws.run(g, s);
        // BFS order is non-decreasing in depth, so the last queued vertex is the farthest.
        const std::uint32_t far = ws.depth[ws.queue[reached - 1]];
        if (part.ordered_counts.size() <= far) {
            part.ordered_counts.resize(far + 1, 0);
        }
        for (std::size_t i = 1; i < reached; ++i) {
            ++part.ordered_counts[ws.depth[ws.queue[i]]];
        }
        if (reached == n) {
            ecc[s] = far;
        } else {
            part.all_reach_everything = false;
        }
    }
}

}  // namespace

std::uint64_t DistanceSummary::finite_pairs() const {
    return std::accumulate(pair_counts.begin(), pair_counts.end(), std::uint64_t{0});
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
    if (source >= g.order()) {
        throw GraphError("BFS source " + std::to_string(source) + " is not a vertex of a graph with " +
                         std::to_string(g.order()) + " vertices");
    }
    BfsWorkspace ws(g.order());
    ws.run(g, source);
    std::vector<Distance> out(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (ws.depth[v] != kUnseen) {
            out[v] = ws.depth[v];
        }
    }
    return out;
}

DistanceSummary distance_summary(const Graph& g, unsigned threads) {
    const std::size_t n = g.order();
    DistanceSummary out;
    out.eccentricity.assign(n, std::nullopt);
    if (n == 0) {
        out.pair_counts.assign(1, 0);
        return out;
    }

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    // Small graphs are not worth a thread spawn.
    if (n < 512) {
        threads = 1;
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

    std::vector<PartialSummary> parts(threads);
    if (threads == 1) {
        summarize_sources(g, 0, static_cast<Vertex>(n), parts[0], out.eccentricity);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        const std::size_t chunk = (n + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const auto first = static_cast<Vertex>(std::min(n, t * chunk));
            const auto last = static_cast<Vertex>(std::min(n, (t + 1) * chunk));
            // Workers write disjoint eccentricity slots.
            pool.emplace_back([&, t, first, last] {
                summarize_sources(g, first, last, parts[t], out.eccentricity);
            });
        }
    }

    std::vector<std::uint64_t> ordered(1, 0);
    bool connected = true;
    for (const auto& part : parts) {
        if (ordered.size() < part.ordered_counts.size()) {
            ordered.resize(part.ordered_counts.size(), 0);
        }
        for (std::size_t k = 0; k < part.ordered_counts.size(); ++k) {
            ordered[k] += part.ordered_counts[k];
        }
        connected = connected && part.all_reach_everything;
    }

    out.pair_counts.resize(ordered.size());
    for (std::size_t k = 0; k < ordered.size(); ++k) {
        out.pair_counts[k] = ordered[k] / 2;
    }
    out.pair_counts[0] = 0;
    out.connected = connected;
    if (!connected) {
        std::fill(out.eccentricity.begin(), out.eccentricity.end(), std::nullopt);
        return out;
    }
    std::uint32_t lo = kUnseen;
    std::uint32_t hi = 0;
    for (const auto& e : out.eccentricity) {
        lo = std::min(lo, *e);
        hi = std::max(hi, *e);
    }
    out.radius = lo;
    out.diameter = hi;
    return out;
}

std::optional<std::uint32_t> girth(const Graph& g) {
    const std::size_t n = g.order();
    std::uint32_t best = kUnseen;
    std::vector<std::uint32_t> depth(n, kUnseen);
    std::vector<Vertex> parent(n);
    std::vector<Vertex> queue(n);
    std::vector<Vertex> touched;
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex v : touched) {
            depth[v] = kUnseen;
        }
        touched.clear();
        std::size_t head = 0;
        std::size_t tail = 0;
        depth[s] = 0;
        parent[s] = s;
        queue[tail++] = s;
        touched.push_back(s);
        while (head < tail) {
            const Vertex u = queue[head++];
            // Cycles closed from this level on are at least 2*depth long.
            if (2 * depth[u] >= best) {
                break;
            }
            for (Vertex w : g.neighbors(u)) {
                if (depth[w] == kUnseen) {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                    touched.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, depth[u] + depth[w] + 1);
                }
            }
        }
    }
    if (best == kUnseen) {
        return std::nullopt;
    }
    return best;
}

std::size_t component_count(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack;
    std::size_t components = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) {
            continue;
        }
        ++components;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) {
        return true;
    }
    BfsWorkspace ws(g.order());
    return ws.run(g, 0) == g.order();
}

}  // namespace vulngraph
