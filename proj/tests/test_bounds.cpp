#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "vulngraph/bounds.hpp"
#include "vulngraph/generators.hpp"

using namespace vulngraph;

namespace {

// 2 * sum_{k=1}^{n-1} (n-k) alpha^k, term by term.
double path_gc_by_sum(std::int64_t n, double alpha) {
    double total = 0.0;
    for (std::int64_t k = 1; k < n; ++k) {
        total += static_cast<double>(n - k) * std::pow(alpha, static_cast<double>(k));
    }
    return 2.0 * total;
}

const auto C = Measure::closeness();
const auto half = Measure::generalized(0.5);

}  // namespace

TEST_CASE("global bounds") {
    const auto r3 = bounds_global(3, half);
    CHECK(*r3.lower == doctest::Approx(2.5));
    CHECK(*r3.upper == doctest::Approx(3.0));
    CHECK(*bounds_global(3, C).lower == doctest::Approx(2.5));

    for (double a : {0.2, 0.5, 0.9}) {
        const auto r2 = bounds_global(2, Measure::generalized(a));
        CHECK(*r2.lower == doctest::Approx(2 * a));
        CHECK(*r2.upper == doctest::Approx(2 * a));
    }

    const auto r10 = bounds_global(10, C);
    CHECK(*r10.lower == 16.00390625);
    CHECK(*r10.lower == doctest::Approx(oracle::gc_pairwise(path(10), 0.5)).epsilon(1e-12));
    CHECK(*r10.upper == 45.0);

    CHECK(bounds_global(5, C, {true, false}).equality_side == EqualitySide::lower);
    CHECK(bounds_global(5, C, {false, true}).equality_side == EqualitySide::upper);
    CHECK_FALSE(bounds_global(5, C).equality_expected);

    CHECK_THROWS_AS(bounds_global(0, C), DomainError);
    CHECK_THROWS_AS(Measure::generalized(1.0), DomainError);
    CHECK_THROWS_AS(bounds_global(4, Measure{MeasureKind::generalized_closeness, 0.0}), DomainError);
}

TEST_CASE("diameter bounds") {
    const auto pet = bounds_diameter(10, 15, 2, half);
    CHECK(*pet.lower == doctest::Approx(30.0));
    CHECK(*pet.upper == doctest::Approx(30.0));
    CHECK(pet.equality_expected);
    const auto pet_c = bounds_diameter(10, 15, 2, C);
    CHECK(*pet_c.lower == 30.0);
    CHECK(*pet_c.upper == 30.0);

    const auto k5 = bounds_diameter(5, 10, 1, C);
    CHECK(*k5.lower == 10.0);
    CHECK(*k5.upper == 10.0);

    const auto p4 = bounds_diameter(4, 3, 3, C);
    CHECK(*p4.lower == 3.75);
    CHECK(*p4.upper == 4.5);
    CHECK_FALSE(p4.equality_expected);
    const double truth = oracle::gc_pairwise(path(4), 0.5);
    CHECK(truth == doctest::Approx(4.25));
    CHECK(*p4.lower < truth);
    CHECK(truth < *p4.upper);

    CHECK_THROWS_AS(bounds_diameter(3, 2, 0, C), DomainError);
}

TEST_CASE("triangle- and quadrangle-free bounds") {
    const auto c6 = bounds_tqfree(6, 6, 24, 3, true, half);
    CHECK(*c6.lower == doctest::Approx(9.75));
    CHECK(*c6.upper == doctest::Approx(9.75));
    CHECK(oracle::gc_pairwise(cycle(6), 0.5) == doctest::Approx(9.75));

    const auto pet = bounds_tqfree(10, 15, 90, 2, true, C);
    CHECK(*pet.lower == 30.0);
    CHECK(*pet.upper == 30.0);

    const auto s5 = bounds_tqfree(5, 4, 20, 2, true, C);
    CHECK(*s5.lower == 7.0);
    CHECK(*s5.upper == 7.0);
    CHECK(oracle::gc_pairwise(star(5), 0.5) == doctest::Approx(7.0));

    const auto not_free = bounds_tqfree(4, 6, 36, 1, false, C);
    CHECK_FALSE(not_free.applicable);
    CHECK_FALSE(not_free.lower.has_value());
}

TEST_CASE("radius bound for triangle- and quadrangle-free graphs") {
    const auto pet = bound_moore(10, 15, 2, true, true);
    CHECK(*pet.upper == 30.0);
    CHECK(pet.equality_expected);
    CHECK_FALSE(pet.lower.has_value());
    CHECK(*bound_moore(6, 6, 3, true, true).upper == 9.75);
    CHECK(*bound_moore(5, 5, 2, true, true).upper == 7.5);
    CHECK(oracle::gc_pairwise(cycle(5), 0.5) == doctest::Approx(7.5));
    CHECK_FALSE(bound_moore(4, 6, 1, false, false).applicable);
}

TEST_CASE("tree / girth >= 7 bounds") {
    const auto p5 = bounds_girth7_or_tree(5, 4, 14, 12, 4, true, C);
    CHECK(*p5.lower == 6.125);
    CHECK(*p5.upper == 6.125);
    CHECK(oracle::gc_pairwise(path(5), 0.5) == doctest::Approx(6.125));

    const Graph fig1 = t_tree({{5, 0, 0, 0}}).graph;
    const auto t = bounds_girth7_or_tree(10, 9, 60, zagreb_m2(fig1), 3, true, C);
    CHECK(*t.lower == 23.25);
    CHECK(*t.upper == 23.25);

    const auto c7 = bounds_girth7_or_tree(7, 7, 28, 28, 3, true, C);
    CHECK(*c7.lower == 12.25);
    CHECK(*c7.upper == 12.25);
    CHECK(oracle::gc_pairwise(cycle(7), 0.5) == doctest::Approx(12.25));

    CHECK_FALSE(bounds_girth7_or_tree(6, 6, 24, 24, 3, false, C).applicable);
}

TEST_CASE("T(n,D) closed forms") {
    CHECK(formulas_tnd(10, 4, 60, TndCase::single_branch, 0.5).closeness == 23.25);
    CHECK(formulas_tnd(10, 4, 52, TndCase::two_branches, 0.5).closeness == 21.75);

    // n = D + 2: one extra leaf on one branch.
    for (std::size_t branches = 2; branches <= 6; ++branches) {
        std::vector<std::size_t> loads(branches, 0);
        loads[0] = 1;
        const Graph g = t_tree({loads}).graph;
        const auto n = static_cast<std::int64_t>(g.order());
        for (double a : {0.1, 0.5, 0.9}) {
            const auto v = formulas_tnd(n, static_cast<std::int64_t>(branches), zagreb_m1(g), TndCase::single_branch, a);
            CHECK(v.gc == doctest::Approx(oracle::gc_pairwise(g, a)).epsilon(1e-12));
        }
    }

    CHECK_THROWS_AS(formulas_tnd(10, 1, 60, TndCase::single_branch, 0.5), DomainError);
    CHECK_THROWS_AS(formulas_tnd(5, 4, 20, TndCase::single_branch, 0.5), DomainError);
    CHECK_THROWS_AS(formulas_tnd(6, 4, 20, TndCase::two_branches, 0.5), DomainError);
    CHECK_THROWS_AS(formulas_tnd(10, 4, 60, TndCase::single_branch, 1.0), DomainError);
}

TEST_CASE("path closed form") {
    CHECK(gc_path_closed_form(2, 0.7) == doctest::Approx(1.4));
    CHECK(gc_path_closed_form(3, 0.5) == doctest::Approx(2.5));
    CHECK(gc_path_closed_form(4, 0.5) == doctest::Approx(4.25));
    CHECK(gc_path_closed_form(1, 0.3) == doctest::Approx(0.0));
    for (std::int64_t n = 1; n <= 40; ++n) {
        for (double a : {0.05, 0.33, 0.5, 0.95}) {
            const double expect = path_gc_by_sum(n, a);
            CHECK(std::abs(gc_path_closed_form(n, a) - expect) <= 1e-9 * std::max(1.0, expect));
        }
    }
    CHECK_THROWS_AS(gc_path_closed_form(5, 1.0), DomainError);
    CHECK_THROWS_AS(gc_path_closed_form(0, 0.5), DomainError);
}

TEST_CASE("closeness forms equal the GC forms at alpha = 1/2 on random scalars") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 200);
        const std::int64_t m = n - 1 + static_cast<std::int64_t>(rng() % 50);
        const std::int64_t m1 = 2 * m + static_cast<std::int64_t>(rng() % 1000);
        const std::int64_t m2 = m + static_cast<std::int64_t>(rng() % 1000);
        const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 9);
        auto same = [](const BoundReport& a, const BoundReport& b) {
            CHECK(*a.lower == doctest::Approx(*b.lower).epsilon(1e-12));
            CHECK(*a.upper == doctest::Approx(*b.upper).epsilon(1e-12));
        };
        same(bounds_global(n, C), bounds_global(n, half));
        same(bounds_diameter(n, m, d, C), bounds_diameter(n, m, d, half));
        same(bounds_tqfree(n, m, m1, d, true, C), bounds_tqfree(n, m, m1, d, true, half));
        same(bounds_girth7_or_tree(n, m, m1, m2, d, true, C), bounds_girth7_or_tree(n, m, m1, m2, d, true, half));
        const std::int64_t branches = 2 + static_cast<std::int64_t>(rng() % 5);
        const std::int64_t order = branches + 3 + static_cast<std::int64_t>(rng() % 40);
        for (TndCase which : {TndCase::single_branch, TndCase::two_branches}) {
            const auto v = formulas_tnd(order, branches, 2 * order, which, 0.5);
            CHECK(v.closeness == doctest::Approx(v.gc).epsilon(1e-12));
        }
    }
}

TEST_CASE("classify_tnd recognises exactly the radius-2 trees") {
    const auto fig1 = t_tree({{5, 0, 0, 0}}).graph;
    const auto fig2 = t_tree({{4, 1, 0, 0}}).graph;
    const auto s1 = classify_tnd(fig1, distance_summary(fig1));
    const auto s2 = classify_tnd(fig2, distance_summary(fig2));
    REQUIRE(s1);
    REQUIRE(s2);
    CHECK(s1->which == TndCase::single_branch);
    CHECK(s2->which == TndCase::two_branches);
    CHECK(s2->branches == 4);
    CHECK(s2->center == 0);
    CHECK_FALSE(classify_tnd(star(6), distance_summary(star(6))));
    CHECK_FALSE(classify_tnd(path(6), distance_summary(path(6))));
    CHECK_FALSE(classify_tnd(cycle(5), distance_summary(cycle(5))));
}

TEST_CASE("graph_parameters requires connectivity") {
    const Graph g = build_graph(4, {{0, 1}, {2, 3}});
    const double grid[] = {0.5};
    CHECK_THROWS_AS(graph_parameters(g, compute_invariants(g, grid)), PreconditionError);
}

TEST_CASE("lower <= upper whenever both are present") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Graph g = random_connected_graph(5 + seed % 12, seed % 6, seed);
        const double grid[] = {0.1, 0.5, 0.9};
        const auto inv = compute_invariants(g, grid);
        const auto p = graph_parameters(g, inv);
        for (double a : grid) {
            for (const auto& r : all_bounds(p, Measure::generalized(a))) {
                if (r.applicable && r.lower && r.upper) {
                    CHECK(*r.lower <= *r.upper * (1 + 1e-12));
                }
            }
        }
    }
}
