#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vulngraph/graph.hpp"

namespace vulngraph {

/// Hop count between two vertices; std::nullopt means unreachable.
using Distance = std::optional<std::uint32_t>;

/**
 * Distance distribution and eccentricity data of a graph.
 *
 * pair_counts[k] is the number of unordered vertex pairs at distance exactly
 * k (index 0 is unused and always 0). Pairs in different components are not
 * counted anywhere. For a disconnected graph every eccentricity, the radius
 * and the diameter are std::nullopt.
 */
struct DistanceSummary {
    std::vector<std::uint64_t> pair_counts;
    std::vector<Distance> eccentricity;
    Distance radius;
    Distance diameter;
    bool connected = true;

    /// d(G, k); zero for k beyond the largest finite distance.
    std::uint64_t pairs_at(std::uint32_t k) const {
        return k < pair_counts.size() ? pair_counts[k] : 0;
    }
    std::uint64_t finite_pairs() const;
};

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// Runs one BFS per source. threads == 0 picks a count from the hardware;
/// the result does not depend on the thread count.
DistanceSummary distance_summary(const Graph& g, unsigned threads = 0);

/// Length of a shortest cycle, or std::nullopt for a forest.
std::optional<std::uint32_t> girth(const Graph& g);

bool is_connected(const Graph& g);

std::size_t component_count(const Graph& g);

}  // namespace vulngraph
