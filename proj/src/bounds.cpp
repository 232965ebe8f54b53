#include "vulngraph/bounds.hpp"

#include <cmath>
#include <string>

namespace vulngraph {

namespace {

double d(std::int64_t v) { return static_cast<double>(v); }

double ipow(double base, std::int64_t exponent) {
    double out = 1.0;
    for (std::int64_t i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

double half_pow(std::int64_t exponent) { return std::ldexp(1.0, -static_cast<int>(exponent)); }

void require_positive_order(std::int64_t n) {
    if (n < 1) {
        throw DomainError("vertex count must be at least 1, got " + std::to_string(n));
    }
}

BoundReport make(BoundId id, Measure measure) {
    BoundReport r;
    r.id = id;
    r.measure = measure;
    return r;
}

}  // namespace

std::string_view to_string(BoundId id) {
    switch (id) {
        case BoundId::global: return "global";
        case BoundId::diameter: return "diameter";
        case BoundId::tqfree: return "tqfree";
        case BoundId::moore: return "moore";
        case BoundId::girth7_or_tree: return "girth7_or_tree";
        case BoundId::tnd_single_branch: return "tnd_single_branch";
        case BoundId::tnd_two_branches: return "tnd_two_branches";
    }
    return "unknown";
}

Measure Measure::generalized(double alpha) {
    require_open_unit(alpha);
    return {MeasureKind::generalized_closeness, alpha};
}

BoundReport bounds_global(std::int64_t n, Measure measure, GlobalShape shape) {
    require_positive_order(n);
    BoundReport r = make(BoundId::global, measure);
    r.applicable = true;
    if (measure.kind == MeasureKind::closeness) {
        r.lower = 2.0 * d(n) - 4.0 + half_pow(n - 2);
        r.upper = d(n) * d(n - 1) / 2.0;
    } else {
        const double a = measure.alpha;
        require_open_unit(a);
        r.lower = 2.0 * (d(n) * a * (1.0 - a) - a * (1.0 - ipow(a, n))) / ((1.0 - a) * (1.0 - a));
        r.upper = a * d(n) * d(n - 1);
    }
    if (shape.is_path && shape.is_complete) {
        r.equality_side = EqualitySide::both;
    } else if (shape.is_path) {
        r.equality_side = EqualitySide::lower;
    } else if (shape.is_complete) {
        r.equality_side = EqualitySide::upper;
    }
    r.equality_expected = r.equality_side != EqualitySide::none;
    return r;
}

BoundReport bounds_diameter(std::int64_t n, std::int64_t m, std::int64_t diameter, Measure measure) {
    if (diameter < 1) {
        throw DomainError("diameter must be at least 1, got " + std::to_string(diameter));
    }
    BoundReport r = make(BoundId::diameter, measure);
    r.applicable = true;
    const double pairs = d(n) * d(n - 1);
    if (measure.kind == MeasureKind::closeness) {
        r.lower = pairs * half_pow(diameter) + d(m) * (1.0 - half_pow(diameter - 1));
        r.upper = (pairs + 2.0 * d(m)) / 4.0;
    } else {
        const double a = measure.alpha;
        require_open_unit(a);
        r.lower = ipow(a, diameter) * pairs + 2.0 * d(m) * a * (1.0 - ipow(a, diameter - 1));
        r.upper = a * a * pairs + 2.0 * d(m) * a * (1.0 - a);
    }
    r.equality_expected = diameter <= 2;
    r.equality_side = r.equality_expected ? EqualitySide::both : EqualitySide::none;
    return r;
}

BoundReport bounds_tqfree(std::int64_t n, std::int64_t m, std::int64_t m1, std::int64_t diameter,
                          bool triangle_and_quadrangle_free, Measure measure) {
    BoundReport r = make(BoundId::tqfree, measure);
    if (measure.kind == MeasureKind::generalized_closeness) {
        require_open_unit(measure.alpha);
    }
    if (!triangle_and_quadrangle_free) {
        return r;
    }
    r.applicable = true;
    const double pairs = d(n) * d(n - 1);
    if (measure.kind == MeasureKind::closeness) {
        r.lower = (pairs - d(m1)) * half_pow(diameter) + (d(m1) + 2.0 * d(m)) / 4.0;
        r.upper = (pairs + d(m1) + 4.0 * d(m)) / 8.0;
    } else {
        const double a = measure.alpha;
        const double tail = a * a * (d(m1) - 2.0 * d(m)) + 2.0 * d(m) * a;
        r.lower = ipow(a, diameter) * (pairs - d(m1)) + tail;
        r.upper = a * a * a * (pairs - d(m1)) + tail;
    }
    r.equality_expected = diameter <= 3;
    r.equality_side = r.equality_expected ? EqualitySide::both : EqualitySide::none;
    return r;
}

BoundReport bound_moore(std::int64_t n, std::int64_t m, std::int64_t radius, bool triangle_and_quadrangle_free,
                        bool moore_or_c6) {
    BoundReport r = make(BoundId::moore, Measure::closeness());
    if (!triangle_and_quadrangle_free) {
        return r;
    }
    r.applicable = true;
    r.upper = (d(n) * (2.0 * d(n) - d(radius)) + 4.0 * d(m)) / 8.0;
    r.equality_expected = moore_or_c6;
    r.equality_side = moore_or_c6 ? EqualitySide::upper : EqualitySide::none;
    return r;
}

BoundReport bounds_girth7_or_tree(std::int64_t n, std::int64_t m, std::int64_t m1, std::int64_t m2,
                                  std::int64_t diameter, bool tree_or_girth_ge_7, Measure measure) {
    BoundReport r = make(BoundId::girth7_or_tree, measure);
    if (measure.kind == MeasureKind::generalized_closeness) {
        require_open_unit(measure.alpha);
    }
    if (!tree_or_girth_ge_7) {
        return r;
    }
    r.applicable = true;
    // Pairs at distance >= 4, doubled.
    const double far_pairs = d(n) * d(n - 1) + d(m1) - 2.0 * d(m) - 2.0 * d(m2);
    if (measure.kind == MeasureKind::closeness) {
        r.lower = far_pairs * half_pow(diameter) + (d(m2) + 3.0 * d(m)) / 4.0;
        r.upper = (d(n) * d(n - 1) + d(m1) + 2.0 * d(m2) + 10.0 * d(m)) / 16.0;
    } else {
        const double a = measure.alpha;
        const double tail = 2.0 * a * a * a * (d(m2) + d(m)) + a * a * d(m1) * (1.0 - 2.0 * a) +
                            2.0 * d(m) * a * (1.0 - a);
        r.lower = ipow(a, diameter) * far_pairs + tail;
        r.upper = ipow(a, 4) * far_pairs + tail;
    }
    r.equality_expected = diameter <= 4;
    r.equality_side = r.equality_expected ? EqualitySide::both : EqualitySide::none;
    return r;
}

TndValues formulas_tnd(std::int64_t n, std::int64_t branches, std::int64_t m1, TndCase which, double alpha) {
    require_open_unit(alpha);
    if (branches < 2) {
        throw DomainError("T(n,D) needs D >= 2, got D = " + std::to_string(branches));
    }
    if (n <= branches + 1) {
        throw DomainError("T(n,D) formulas need n > D + 1, got n = " + std::to_string(n) +
                          ", D = " + std::to_string(branches));
    }
    if (which == TndCase::two_branches && n < branches + 3) {
        throw DomainError("two loaded branches need n >= D + 3, got n = " + std::to_string(n) +
                          ", D = " + std::to_string(branches));
    }
    const double a = alpha;
    // Pairs at distance 3 equal RM2 = (D - 1)(n - D - 1) on every member of T(n, D).
    const double rm2 = d(branches - 1) * d(n - branches - 1);
    const double near = a * a * d(m1) + 2.0 * d(n - 1) * a * (1.0 - a);
    TndValues out;
    if (which == TndCase::single_branch) {
        out.gc = 2.0 * a * a * a * rm2 + near;
        out.closeness = (rm2 + d(m1) + 2.0 * d(n - 1)) / 4.0;
    } else {
        out.gc = ipow(a, 4) * (d(n) * d(n - 1) - d(m1)) + 2.0 * a * a * a * rm2 * (1.0 - a) + near;
        out.closeness = (d(n - 1) * d(n + 8) + 2.0 * rm2 + 3.0 * d(m1)) / 16.0;
    }
    return out;
}

double gc_path_closed_form(std::int64_t n, double alpha) {
    require_positive_order(n);
    require_open_unit(alpha);
    const double a = alpha;
    return 2.0 * (d(n) * a * (1.0 - a) - a * (1.0 - ipow(a, n))) / ((1.0 - a) * (1.0 - a));
}

std::optional<TndShape> classify_tnd(const Graph& g, const DistanceSummary& summary) {
    const std::size_t n = g.order();
    if (!summary.connected || n == 0 || g.size() != n - 1 || summary.radius != 2u) {
        return std::nullopt;
    }
    TndShape shape;
    for (Vertex v = 0; v < n; ++v) {
        if (summary.eccentricity[v] == 2u) {
            shape.center = v;
            break;
        }
    }
    shape.branches = static_cast<std::int64_t>(g.degree(shape.center));
    int loaded = 0;
    for (Vertex b : g.neighbors(shape.center)) {
        if (g.degree(b) > 1) {
            ++loaded;
        }
    }
    shape.which = loaded >= 2 ? TndCase::two_branches : TndCase::single_branch;
    return shape;
}

GraphParameters graph_parameters(const Graph& g, const InvariantSet& inv) {
    if (!inv.distances.connected) {
        throw PreconditionError("bounds require a connected graph");
    }
    GraphParameters p;
    p.n = static_cast<std::int64_t>(inv.n);
    p.m = static_cast<std::int64_t>(inv.m);
    p.m1 = inv.m1;
    p.m2 = inv.m2;
    p.radius = inv.distances.radius.value_or(0);
    p.diameter = inv.distances.diameter.value_or(0);
    p.flags = inv.flags;
    bool max_degree_two = true;
    for (Vertex v = 0; v < g.order(); ++v) {
        max_degree_two = max_degree_two && g.degree(v) <= 2;
    }
    p.is_path = p.flags.is_tree && max_degree_two;
    p.is_complete = 2 * p.m == p.n * (p.n - 1);
    p.tnd = classify_tnd(g, inv.distances);
    return p;
}

std::vector<BoundReport> all_bounds(const GraphParameters& p, Measure measure) {
    std::vector<BoundReport> out;
    out.push_back(bounds_global(p.n, measure, {p.is_path, p.is_complete}));
    if (p.diameter >= 1) {
        out.push_back(bounds_diameter(p.n, p.m, p.diameter, measure));
    } else {
        out.push_back(make(BoundId::diameter, measure));
    }
    const bool tq_free = p.flags.triangle_free && p.flags.quadrangle_free;
    out.push_back(bounds_tqfree(p.n, p.m, p.m1, p.diameter, tq_free, measure));
    if (measure.kind == MeasureKind::closeness) {
        out.push_back(bound_moore(p.n, p.m, p.radius, tq_free, p.flags.is_moore_diam2 || p.flags.is_c6));
    }
    out.push_back(bounds_girth7_or_tree(p.n, p.m, p.m1, p.m2, p.diameter, p.flags.is_tree || p.flags.girth_ge_7,
                                        measure));
    for (TndCase which : {TndCase::single_branch, TndCase::two_branches}) {
        BoundReport r = make(which == TndCase::single_branch ? BoundId::tnd_single_branch
                                                             : BoundId::tnd_two_branches,
                             measure);
        if (p.tnd && p.tnd->which == which) {
            const TndValues v = formulas_tnd(p.n, p.tnd->branches, p.m1, which, measure.alpha);
            const double value = measure.kind == MeasureKind::closeness ? v.closeness : v.gc;
            r.lower = value;
            r.upper = value;
            r.applicable = true;
            r.equality_expected = true;
            r.equality_side = EqualitySide::both;
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace vulngraph
