#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "vulngraph/graph.hpp"

namespace vulngraph {

Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
/// Star on n vertices, centre 0.
Graph star(std::size_t n);
Graph petersen();
Graph pentagon();

/// Parameters of a tree T(r_1, ..., r_D): a star with D leaves, leaf i
/// carrying r_i further pendant vertices.
struct TndSpec {
    std::vector<std::size_t> loads;

    std::size_t branches() const { return loads.size(); }
    std::size_t order() const;
};

struct TndTree {
    Graph graph;
    /// True when the loads arrived unsorted and were sorted non-increasingly.
    bool canonicalized = false;
};

/// Centre 0, branch vertices 1..D, then the pendants of branch 1, branch 2, ...
/// Requires D >= 2.
TndTree t_tree(TndSpec spec);

/// Decodes a Pruefer sequence of length n - 2 into the labelled tree on n vertices.
Graph tree_from_pruefer(std::span<const Vertex> sequence);

/// Calls `visit` with every labelled tree on n vertices (n^(n-2) of them for
/// n >= 2), in lexicographic order of Pruefer sequence.
void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& visit);

inline constexpr std::size_t kMaxEnumerationOrder = 6;

/**
 * Streams every connected labelled graph on n vertices, in increasing order
 * of the edge bitmask. Bit i of the mask is the i-th pair (u, v), u < v, in
 * lexicographic order. n is capped at kMaxEnumerationOrder.
 */
class ConnectedGraphStream {
public:
    explicit ConnectedGraphStream(std::size_t n);

    std::optional<Graph> next();

private:
    std::size_t n_;
    std::vector<Edge> pairs_;
    std::uint64_t mask_ = 0;
    std::uint64_t end_ = 0;
};

std::vector<Graph> enumerate_connected_graphs(std::size_t n);

/// Uniform labelled spanning tree (random Pruefer sequence) plus
/// `extra_edges` distinct non-tree edges. Uses std::mt19937_64 seeded with
/// `seed` and plain rejection sampling, so the output is identical on every
/// standard library.
Graph random_connected_graph(std::size_t n, std::size_t extra_edges, std::uint64_t seed);

/// All T(r_1..r_D) specs with D in [min_branches, max_branches], loads
/// non-increasing and sum of loads <= max_load.
std::vector<TndSpec> tnd_sweep(std::size_t min_branches, std::size_t max_branches, std::size_t max_load);

}  // namespace vulngraph
