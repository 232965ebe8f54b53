#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "vulngraph/graph.hpp"
#include "vulngraph/metrics.hpp"

namespace vulngraph {

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws DomainError unless 0 < alpha < 1.
void require_open_unit(double alpha);

/// Closeness: sum over ordered pairs of 2^-d(i,j). Pairs in different
/// components contribute nothing.
double closeness(const Graph& g);
double closeness(const DistanceSummary& summary);

/// Generalized closeness: sum over ordered pairs of alpha^d(i,j).
double generalized_closeness(const Graph& g, double alpha);
double generalized_closeness(const DistanceSummary& summary, double alpha);

std::int64_t zagreb_m1(const Graph& g);
std::int64_t zagreb_m2(const Graph& g);
std::int64_t reduced_zagreb_m2(const Graph& g);

/// Number of unordered pairs at distance exactly 3.
std::int64_t wiener_polarity(const Graph& g);
std::int64_t wiener_polarity(const DistanceSummary& summary);

bool has_triangle(const Graph& g);
bool has_quadrangle(const Graph& g);

struct StructuralFlags {
    bool is_tree = false;
    bool triangle_free = false;
    bool quadrangle_free = false;
    bool girth_ge_7 = false;
    bool is_moore_diam2 = false;
    bool is_c6 = false;

    friend bool operator==(const StructuralFlags&, const StructuralFlags&) = default;
};

StructuralFlags structural_flags(const Graph& g);
StructuralFlags structural_flags(const Graph& g, const DistanceSummary& summary,
                                 std::optional<std::uint32_t> girth_value);

struct AlphaValue {
    double alpha = 0.0;
    double value = 0.0;
};

/// Every measure of one graph, computed from a single distance sweep.
struct InvariantSet {
    std::size_t n = 0;
    std::size_t m = 0;
    DistanceSummary distances;
    double closeness = 0.0;
    std::vector<AlphaValue> gc;
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;
    std::int64_t rm2 = 0;
    std::int64_t wiener_polarity = 0;
    std::optional<std::uint32_t> girth;
    StructuralFlags flags;
};

InvariantSet compute_invariants(const Graph& g, std::span<const double> alphas);

}  // namespace vulngraph
