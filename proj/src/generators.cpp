#include "vulngraph/generators.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>

#include "vulngraph/invariants.hpp"

namespace vulngraph {

namespace {

void require_order(std::size_t n, std::size_t minimum, const char* family) {
    if (n < minimum) {
        throw DomainError(std::string(family) + " needs n >= " + std::to_string(minimum) + ", got n = " +
                          std::to_string(n));
    }
}

// Unbiased draw from [0, bound) by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t span = std::mt19937_64::max() - std::mt19937_64::min();
    const std::uint64_t limit = span - (span % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = rng() - std::mt19937_64::min();
    } while (x > limit);
    return x % bound;
}

// Connectivity of an edge subset on few vertices via union-find.
bool mask_connected(std::size_t n, std::span<const Edge> pairs, std::uint64_t mask) {
    if (n <= 1) {
        return true;
    }
    std::array<Vertex, kMaxEnumerationOrder> parent{};
    std::iota(parent.begin(), parent.begin() + static_cast<std::ptrdiff_t>(n), Vertex{0});
    auto find = [&](Vertex v) {
        while (parent[v] != v) {
            v = parent[v] = parent[parent[v]];
        }
        return v;
    };
    std::size_t components = n;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) {
            const Vertex a = find(pairs[i].first);
            const Vertex b = find(pairs[i].second);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    }
    return components == 1;
}

}  // namespace

Graph path(std::size_t n) {
    require_order(n, 1, "path");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.emplace_back(v - 1, v);
    }
    return build_graph(n, edges);
}

Graph complete(std::size_t n) {
    require_order(n, 1, "complete");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return build_graph(n, edges);
}

Graph cycle(std::size_t n) {
    require_order(n, 3, "cycle");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    }
    return build_graph(n, edges);
}

Graph star(std::size_t n) {
    require_order(n, 1, "star");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.emplace_back(0, v);
    }
    return build_graph(n, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, i + 5);                // spokes
    }
    return build_graph(10, edges);
}

Graph pentagon() { return cycle(5); }

std::size_t TndSpec::order() const { return 1 + loads.size() + std::accumulate(loads.begin(), loads.end(), std::size_t{0}); }

TndTree t_tree(TndSpec spec) {
    if (spec.branches() < 2) {
        throw DomainError("T(n,D) needs D >= 2 branches, got " + std::to_string(spec.branches()));
    }
    TndTree out;
    if (!std::is_sorted(spec.loads.begin(), spec.loads.end(), std::greater<>())) {
        std::sort(spec.loads.begin(), spec.loads.end(), std::greater<>());
        out.canonicalized = true;
    }
    const std::size_t n = spec.order();
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex b = 1; b <= spec.branches(); ++b) {
        edges.emplace_back(0, b);
    }
    auto next = static_cast<Vertex>(spec.branches() + 1);
    for (Vertex b = 1; b <= spec.branches(); ++b) {
        for (std::size_t k = 0; k < spec.loads[b - 1]; ++k) {
            edges.emplace_back(b, next++);
        }
    }
    out.graph = build_graph(n, edges);
    return out;
}

Graph tree_from_pruefer(std::span<const Vertex> sequence) {
    const std::size_t n = sequence.size() + 2;
    std::vector<std::size_t> remaining(n, 1);
    for (Vertex x : sequence) {
        if (x >= n) {
            throw GraphError("Pruefer entry " + std::to_string(x) + " out of range for n = " + std::to_string(n));
        }
        ++remaining[x];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v) {
        if (remaining[v] == 1) {
            leaves.push(v);
        }
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex x : sequence) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--remaining[x] == 1) {
            leaves.push(x);
        }
    }
    const Vertex a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return build_graph(n, edges);
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& visit) {
    if (n == 0) {
        return;
    }
    if (n == 1) {
        visit(build_graph(1, {}));
        return;
    }
    std::vector<Vertex> seq(n - 2, 0);
    while (true) {
        visit(tree_from_pruefer(seq));
        // Odometer increment, last position fastest.
        std::size_t i = seq.size();
        while (i > 0 && seq[i - 1] + 1 == n) {
            seq[--i] = 0;
        }
        if (i == 0) {
            return;
        }
        ++seq[i - 1];
    }
}

ConnectedGraphStream::ConnectedGraphStream(std::size_t n) : n_(n) {
    if (n > kMaxEnumerationOrder) {
        throw DomainError("exhaustive enumeration is capped at n = " + std::to_string(kMaxEnumerationOrder) +
                          ", got n = " + std::to_string(n));
    }
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            pairs_.emplace_back(u, v);
        }
    }
    end_ = std::uint64_t{1} << pairs_.size();
    if (n == 0) {
        end_ = 0;
    }
}

std::optional<Graph> ConnectedGraphStream::next() {
    while (mask_ < end_) {
        const std::uint64_t mask = mask_++;
        if (!mask_connected(n_, pairs_, mask)) {
            continue;
        }
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            if ((mask >> i) & 1U) {
                edges.push_back(pairs_[i]);
            }
        }
        return build_graph(n_, edges);
    }
    return std::nullopt;
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
    std::vector<Graph> out;
    ConnectedGraphStream stream(n);
    while (auto g = stream.next()) {
        out.push_back(std::move(*g));
    }
    return out;
}

Graph random_connected_graph(std::size_t n, std::size_t extra_edges, std::uint64_t seed) {
    require_order(n, 1, "random graph");
    const std::size_t capacity = n * (n - 1) / 2 - (n - 1);
    if (extra_edges > capacity) {
        throw DomainError("extra_edges = " + std::to_string(extra_edges) + " exceeds the " +
                          std::to_string(capacity) + " non-tree pairs available on " + std::to_string(n) +
                          " vertices");
    }
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    if (n >= 2) {
        std::vector<Vertex> seq(n - 2);
        for (auto& x : seq) {
            x = static_cast<Vertex>(uniform_below(rng, n));
        }
        edges = tree_from_pruefer(seq).edges();
    }
    std::set<Edge> present(edges.begin(), edges.end());
    while (extra_edges > 0) {
        auto u = static_cast<Vertex>(uniform_below(rng, n));
        auto v = static_cast<Vertex>(uniform_below(rng, n));
        if (u == v) {
            continue;
        }
        if (u > v) {
            std::swap(u, v);
        }
        if (present.insert({u, v}).second) {
            edges.emplace_back(u, v);
            --extra_edges;
        }
    }
    return build_graph(n, edges);
}

std::vector<TndSpec> tnd_sweep(std::size_t min_branches, std::size_t max_branches, std::size_t max_load) {
    std::vector<TndSpec> out;
    std::vector<std::size_t> loads;
    // Non-increasing sequences of fixed length with bounded sum.
    std::function<void(std::size_t, std::size_t, std::size_t)> extend = [&](std::size_t slots, std::size_t cap,
                                                                           std::size_t budget) {
        if (slots == 0) {
            out.push_back(TndSpec{loads});
            return;
        }
        for (std::size_t r = std::min(cap, budget) + 1; r-- > 0;) {
            loads.push_back(r);
            extend(slots - 1, r, budget - r);
            loads.pop_back();
        }
    };
    for (std::size_t branches = min_branches; branches <= max_branches; ++branches) {
        extend(branches, max_load, max_load);
    }
    return out;
}

}  // namespace vulngraph
