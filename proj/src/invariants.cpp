#include "vulngraph/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vulngraph {

void require_open_unit(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("alpha must lie in the open interval (0, 1), got " + std::to_string(alpha));
    }
}

double generalized_closeness(const DistanceSummary& summary, double alpha) {
    require_open_unit(alpha);
    // Ascending distance order; powers by repeated multiplication.
    double total = 0.0;
    double power = 1.0;
    for (std::size_t k = 1; k < summary.pair_counts.size(); ++k) {
        power *= alpha;
        total += static_cast<double>(summary.pair_counts[k]) * power;
    }
    return 2.0 * total;
}

double generalized_closeness(const Graph& g, double alpha) {
    require_open_unit(alpha);
    return generalized_closeness(distance_summary(g), alpha);
}

double closeness(const DistanceSummary& summary) {
    double total = 0.0;
    for (std::size_t k = 1; k < summary.pair_counts.size(); ++k) {
        total += std::ldexp(static_cast<double>(summary.pair_counts[k]), -static_cast<int>(k));
    }
    return 2.0 * total;
}

double closeness(const Graph& g) { return closeness(distance_summary(g)); }

std::int64_t zagreb_m1(const Graph& g) {
    std::int64_t total = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto d = static_cast<std::int64_t>(g.degree(v));
        total += d * d;
    }
    return total;
}

std::int64_t zagreb_m2(const Graph& g) {
    std::int64_t total = 0;
    for (const auto& [u, v] : g.edges()) {
        total += static_cast<std::int64_t>(g.degree(u)) * static_cast<std::int64_t>(g.degree(v));
    }
    return total;
}

std::int64_t reduced_zagreb_m2(const Graph& g) {
    std::int64_t total = 0;
    for (const auto& [u, v] : g.edges()) {
        total += (static_cast<std::int64_t>(g.degree(u)) - 1) * (static_cast<std::int64_t>(g.degree(v)) - 1);
    }
    return total;
}

std::int64_t wiener_polarity(const DistanceSummary& summary) {
    return static_cast<std::int64_t>(summary.pairs_at(3));
}

std::int64_t wiener_polarity(const Graph& g) { return wiener_polarity(distance_summary(g)); }

bool has_triangle(const Graph& g) {
    for (const auto& [u, v] : g.edges()) {
        const auto nu = g.neighbors(u);
        const auto nv = g.neighbors(v);
        auto a = nu.begin();
        auto b = nv.begin();
        while (a != nu.end() && b != nv.end()) {
            if (*a < *b) {
                ++a;
            } else if (*b < *a) {
                ++b;
            } else {
                return true;
            }
        }
    }
    return false;
}

bool has_quadrangle(const Graph& g) {
    // Two distinct common neighbours of u and v close a 4-cycle.
    const std::size_t n = g.order();
    std::vector<std::size_t> stamp(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex w : g.neighbors(u)) {
            for (Vertex v : g.neighbors(w)) {
                if (v <= u) {
                    continue;
                }
                if (stamp[v] == u + 1) {
                    return true;
                }
                stamp[v] = u + 1;
            }
        }
    }
    return false;
}

StructuralFlags structural_flags(const Graph& g, const DistanceSummary& summary,
                                 std::optional<std::uint32_t> girth_value) {
    StructuralFlags f;
    const std::size_t n = g.order();
    f.is_tree = summary.connected && n >= 1 && g.size() == n - 1;
    f.triangle_free = !has_triangle(g);
    f.quadrangle_free = !has_quadrangle(g);
    f.girth_ge_7 = !girth_value || *girth_value >= 7;

    bool regular = n > 0;
    const std::size_t k = n > 0 ? g.degree(0) : 0;
    for (Vertex v = 0; v < n && regular; ++v) {
        regular = g.degree(v) == k;
    }
    f.is_moore_diam2 = regular && summary.connected && summary.diameter == 2u && girth_value == 5u &&
                       n == k * k + 1;
    f.is_c6 = n == 6 && regular && k == 2 && summary.connected && girth_value == 6u;
    return f;
}

StructuralFlags structural_flags(const Graph& g) { return structural_flags(g, distance_summary(g), girth(g)); }

InvariantSet compute_invariants(const Graph& g, std::span<const double> alphas) {
    for (double a : alphas) {
        require_open_unit(a);
    }
    InvariantSet s;
    s.n = g.order();
    s.m = g.size();
    s.distances = distance_summary(g);
    s.closeness = closeness(s.distances);
    for (double a : alphas) {
        s.gc.push_back({a, generalized_closeness(s.distances, a)});
    }
    s.m1 = zagreb_m1(g);
    s.m2 = zagreb_m2(g);
    s.rm2 = reduced_zagreb_m2(g);
    s.wiener_polarity = wiener_polarity(s.distances);
    s.girth = girth(g);
    s.flags = structural_flags(g, s.distances, s.girth);
    return s;
}

}  // namespace vulngraph
