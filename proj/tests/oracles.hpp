#pragma once

// Brute-force reference computations used only by the tests. They share no
// code with the library paths they check.

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "vulngraph/graph.hpp"

namespace oracle {

using vulngraph::Graph;
using vulngraph::Vertex;

inline constexpr int kInf = 1 << 28;

/// All-pairs hop distances by Floyd-Warshall on the adjacency matrix.
inline std::vector<std::vector<int>> floyd(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (Vertex u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (Vertex v : g.neighbors(u)) {
            d[u][v] = 1;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (d[i][k] + d[k][j] < d[i][j]) {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    return d;
}

/// Sum over ordered pairs of alpha^d, pair by pair; unreachable pairs add nothing.
inline double gc_pairwise(const Graph& g, double alpha) {
    const auto d = floyd(g);
    double total = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (i != j && d[i][j] < kInf) {
                total += std::pow(alpha, d[i][j]);
            }
        }
    }
    return total;
}

/// Unordered pairs at distance exactly k.
inline std::int64_t pairs_at(const Graph& g, int k) {
    const auto d = floyd(g);
    std::int64_t count = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            count += d[i][j] == k;
        }
    }
    return count;
}

/// Girth as min over edges uv of (distance u..v without the edge uv) + 1.
inline std::optional<int> girth_by_edge_removal(const Graph& g) {
    int best = kInf;
    for (const auto& [u, v] : g.edges()) {
        std::vector<vulngraph::Edge> rest;
        for (const auto& e : g.edges()) {
            if (e != std::make_pair(u, v)) {
                rest.push_back(e);
            }
        }
        const auto d = floyd(vulngraph::build_graph(g.order(), rest));
        if (d[u][v] < kInf) {
            best = std::min(best, d[u][v] + 1);
        }
    }
    if (best == kInf) {
        return std::nullopt;
    }
    return best;
}

inline bool triangle_by_triples(const Graph& g) {
    const std::size_t n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) return true;
    return false;
}

/// Any 4 distinct vertices a-b-c-d-a forming a cycle.
inline bool quadrangle_by_quadruples(const Graph& g) {
    const std::size_t n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            for (Vertex c = 0; c < n; ++c)
                for (Vertex d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, a)) return true;
                }
    return false;
}

/// Connected labelled graphs on n vertices, by DFS over every edge subset.
inline std::size_t count_connected_labeled(std::size_t n) {
    if (n <= 1) {
        return n;
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            if ((mask >> e) & 1U) {
                adj[pairs[e].first][pairs[e].second] = adj[pairs[e].second][pairs[e].first] = true;
            }
        }
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w) {
                if (adj[u][w] && !seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        count += reached == n;
    }
    return count;
}

/// Pruefer encoding: repeatedly strip the smallest leaf, record its neighbour.
inline std::vector<Vertex> pruefer_encode(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> degree(n);
    std::vector<bool> removed(n, false);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<Vertex> seq;
    for (std::size_t step = 0; step + 2 < n; ++step) {
        Vertex leaf = 0;
        while (removed[leaf] || degree[leaf] != 1) ++leaf;
        for (Vertex w : g.neighbors(leaf)) {
            if (!removed[w]) {
                seq.push_back(w);
                --degree[w];
            }
        }
        removed[leaf] = true;
    }
    return seq;
}

}  // namespace oracle
