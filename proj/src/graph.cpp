#include "vulngraph/graph.hpp"

#include <algorithm>

namespace vulngraph {

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) {
        return false;
    }
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") references a vertex outside 0.." +
                             std::to_string(n == 0 ? 0 : n - 1));
        }
        if (u == v) {
            throw GraphError("self-loop at vertex " + std::to_string(u));
        }
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        nbrs.shrink_to_fit();
        degree_sum += nbrs.size();
    }
    g.edge_count_ = degree_sum / 2;
    return g;
}

}  // namespace vulngraph
