#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vulngraph {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graph input: self-loops, out-of-range indices,
/// or a vertex query outside 0..n-1.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Immutable simple undirected graph on the dense vertex set 0..n-1.
 *
 * Neighbour lists are sorted and duplicate-free, adjacency is symmetric and
 * there are no self-loops. Instances are only produced by build_graph(), so
 * every Graph in the program satisfies these invariants.
 */
class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    bool has_edge(Vertex u, Vertex v) const;

    /// Edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Builds a validated graph. Duplicate edges (in either orientation) collapse
/// to one; self-loops and indices >= n throw GraphError.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

}  // namespace vulngraph
