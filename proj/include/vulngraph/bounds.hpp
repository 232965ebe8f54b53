#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vulngraph/graph.hpp"
#include "vulngraph/invariants.hpp"

namespace vulngraph {

/// Raised when a graph-level precondition (connectivity) fails.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class BoundId {
    global,             // path / complete graph extremes
    diameter,           // n, m and diameter
    tqfree,             // triangle- and quadrangle-free, via M1
    moore,              // triangle- and quadrangle-free, via radius
    girth7_or_tree,     // trees and girth >= 7, via M1 and M2
    tnd_single_branch,  // exact value on T(n,D) with one loaded branch
    tnd_two_branches,   // exact value on T(n,D) with two or more loaded branches
};

std::string_view to_string(BoundId id);

enum class MeasureKind { closeness, generalized_closeness };

/// Which measure a bound speaks about. Closeness bounds use the dedicated
/// closeness formulas rather than the alpha = 1/2 instance of the GC ones.
struct Measure {
    MeasureKind kind = MeasureKind::closeness;
    double alpha = 0.5;

    static Measure closeness() { return {MeasureKind::closeness, 0.5}; }
    static Measure generalized(double alpha);
};

/// Which side of the interval the stated sufficient condition makes tight.
enum class EqualitySide { none, lower, upper, both };

struct BoundReport {
    BoundId id = BoundId::global;
    Measure measure;
    std::optional<double> lower;
    std::optional<double> upper;
    bool applicable = false;
    bool equality_expected = false;
    EqualitySide equality_side = EqualitySide::none;
};

/// Structural hints for the global bound's equality cases.
struct GlobalShape {
    bool is_path = false;
    bool is_complete = false;
};

BoundReport bounds_global(std::int64_t n, Measure measure, GlobalShape shape = {});
BoundReport bounds_diameter(std::int64_t n, std::int64_t m, std::int64_t diameter, Measure measure);
BoundReport bounds_tqfree(std::int64_t n, std::int64_t m, std::int64_t m1, std::int64_t diameter,
                          bool triangle_and_quadrangle_free, Measure measure);
/// Closeness-only upper bound for triangle- and quadrangle-free graphs.
BoundReport bound_moore(std::int64_t n, std::int64_t m, std::int64_t radius, bool triangle_and_quadrangle_free,
                        bool moore_or_c6);
BoundReport bounds_girth7_or_tree(std::int64_t n, std::int64_t m, std::int64_t m1, std::int64_t m2,
                                  std::int64_t diameter, bool tree_or_girth_ge_7, Measure measure);

enum class TndCase { single_branch, two_branches };

struct TndValues {
    double gc = 0.0;
    double closeness = 0.0;
};

/// Exact GC and closeness of a tree in T(n, D) from n, D and M1 alone.
TndValues formulas_tnd(std::int64_t n, std::int64_t branches, std::int64_t m1, TndCase which, double alpha);

/// GC of the path on n vertices in closed form.
double gc_path_closed_form(std::int64_t n, double alpha);

/// Shape of a tree in T(n, D): a centre vertex whose D neighbours carry all
/// remaining vertices as pendants, with at least one pendant somewhere.
struct TndShape {
    Vertex center = 0;
    std::int64_t branches = 0;
    TndCase which = TndCase::single_branch;
};

/// Recognises T(n, D) membership: exactly the trees of radius 2.
std::optional<TndShape> classify_tnd(const Graph& g, const DistanceSummary& summary);

/// Scalar parameters the closed forms consume, extracted once per graph.
struct GraphParameters {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;
    std::int64_t radius = 0;
    std::int64_t diameter = 0;
    StructuralFlags flags;
    bool is_path = false;
    bool is_complete = false;
    std::optional<TndShape> tnd;
};

/// Throws PreconditionError for a disconnected graph.
GraphParameters graph_parameters(const Graph& g, const InvariantSet& inv);

/// Every bound for one measure. Inapplicable bounds are still listed with
/// applicable == false so callers can see why they were skipped.
std::vector<BoundReport> all_bounds(const GraphParameters& p, Measure measure);

}  // namespace vulngraph
