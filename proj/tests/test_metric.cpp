#include "mvfp/metric.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace mvfp;
using namespace mvfp::testsupport;

TEST_CASE("point sets are sorted, deduplicated and never empty") {
    PointSet s({Point{3}, Point{1}, Point{3}, Point{0}});
    REQUIRE(s.size() == 3);
    CHECK(s.members()[0] == Point{0});
    CHECK(s.members()[1] == Point{1});
    CHECK(s.members()[2] == Point{3});
    CHECK(s.contains(Point{1}));
    CHECK_FALSE(s.contains(Point{2}));
    CHECK_THROWS_AS(PointSet({}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet({Point{-1}}), std::invalid_argument);
}

TEST_CASE("distances on matrix, coordinate and grid spaces") {
    auto m = MetricSpace::from_matrix({{0, 1}, {1, 0}});
    CHECK(distance(m, Point{0}, Point{1}) == 1.0);
    CHECK(distance(m, Point{0}, Point{0}) == 0.0);

    auto line = MetricSpace::from_coordinates({0, 1, 2, 4});
    CHECK(distance(line, Point{1}, Point{3}) == 3.0);
    CHECK(line.label(Point{3}) == 4.0);

    auto g = MetricSpace::grid(0.0, 1.0 / 64.0, 65);
    CHECK(g.size() == 65);
    CHECK(distance(g, Point{1}, Point{3}) == 1.0 / 32.0);
    CHECK(g.label(Point{64}) == 1.0);
}

TEST_CASE("grid and coordinate constructors reject bad shapes") {
    CHECK_THROWS_AS(MetricSpace::grid(0.0, 0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(MetricSpace::grid(0.0, -1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(MetricSpace::grid(0.0, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(MetricSpace::from_coordinates({}), std::invalid_argument);
    CHECK_THROWS_AS(MetricSpace::from_coordinates({1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(MetricSpace::from_matrix({{0, 1}, {1, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(MetricSpace::from_matrix({{0, 1}, {1, 0}}, {3}), std::invalid_argument);
    CHECK_THROWS_AS(MetricSpace::from_matrix({{0, 1}, {1, 0}}, {3, 3}), std::invalid_argument);
}

TEST_CASE("coordinates are sorted into ascending label order") {
    auto s = MetricSpace::from_coordinates({4, 0, 2, 1});
    CHECK(s.label(Point{0}) == 0.0);
    CHECK(s.label(Point{3}) == 4.0);
    CHECK(distance(s, Point{0}, Point{3}) == 4.0);
}

TEST_CASE("point_with_label matches exactly and within relative tolerance") {
    auto g = MetricSpace::grid(0.0, 0.1, 11);
    auto p = g.point_with_label(0.3);
    REQUIRE(p.has_value());
    CHECK(p->index == 3);
    CHECK(g.point_with_label(0.3 + 1e-13).has_value());
    CHECK_FALSE(g.point_with_label(0.35).has_value());
    CHECK_FALSE(g.point_with_label(7.0).has_value());
}

TEST_CASE("point_set_distance is the infimum over members") {
    auto line = literal_line_space();
    CHECK(point_set_distance(line, Point{3}, PointSet({Point{0}, Point{1}})) == 3.0);
    CHECK(point_set_distance(line, Point{1}, PointSet({Point{0}, Point{1}})) == 0.0);
}

TEST_CASE("nearest_member breaks ties toward the lowest index") {
    auto s = MetricSpace::from_coordinates({-1, 0, 1});
    // labels -1 and 1 are equidistant from 0; the lower index wins
    CHECK(nearest_member(s, Point{1}, PointSet({Point{0}, Point{2}})) == Point{0});
    CHECK(nearest_member(s, Point{1}, PointSet({Point{2}, Point{0}})) == Point{0});
}

TEST_CASE("hausdorff distance on hand-checked pairs") {
    auto line = literal_line_space();
    PointSet a({Point{0}, Point{1}});
    PointSet b({Point{1}, Point{2}});
    CHECK(hausdorff(line, a, b) == 1.0);
    CHECK(hausdorff(line, a, a) == 0.0);
    CHECK(hausdorff(line, PointSet({Point{0}}), PointSet({Point{3}})) == 4.0);
    // one-sided containment still pays for the far member
    CHECK(hausdorff(line, PointSet({Point{0}}), PointSet({Point{0}, Point{3}})) == 4.0);
}

TEST_CASE("validate_metric accepts the shipped spaces") {
    CHECK(validate_metric(halving_space()).valid);
    CHECK(validate_metric(literal_line_space()).valid);
    CHECK(validate_metric(MetricSpace::grid(-3.0, 0.1, 50)).valid);
}

TEST_CASE("validate_metric pinpoints each axiom violation") {
    auto diag = MetricSpace::from_matrix({{1, 1}, {1, 0}});
    auto r1 = validate_metric(diag);
    REQUIRE_FALSE(r1.valid);
    CHECK(r1.detail.find("must be 0") != std::string::npos);

    auto asym = MetricSpace::from_matrix({{0, 1}, {2, 0}});
    auto r2 = validate_metric(asym);
    REQUIRE_FALSE(r2.valid);
    CHECK(r2.detail.find("asymmetry") != std::string::npos);

    auto zero_off = MetricSpace::from_matrix({{0, 0}, {0, 0}});
    auto r3 = validate_metric(zero_off);
    REQUIRE_FALSE(r3.valid);
    CHECK(r3.detail.find("must be positive") != std::string::npos);

    auto tri = MetricSpace::from_matrix({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
    auto r4 = validate_metric(tri);
    REQUIRE_FALSE(r4.valid);
    CHECK(r4.detail.find("triangle") != std::string::npos);
}

TEST_CASE("grid distances pass validation despite rounding in the step") {
    // 0.1 is not a dyadic; derived spaces get a relative slack
    CHECK(validate_metric(MetricSpace::grid(0.0, 0.1, 101)).valid);
    CHECK(validate_metric(MetricSpace::from_coordinates({0.1, 0.2, 0.30000000000000004})).valid);
}

TEST_CASE("hausdorff satisfies the metric axioms on random exact spaces") {
    std::mt19937_64 rng(20260819);
    for (int round = 0; round < 60; ++round) {
        MetricSpace space = (round % 2 == 0) ? random_integer_coords_space(rng, 8)
                                             : random_closure_matrix_space(rng, 8);
        REQUIRE(validate_metric(space).valid);
        for (int trial = 0; trial < 25; ++trial) {
            PointSet a = random_point_set(rng, 8, 5);
            PointSet b = random_point_set(rng, 8, 5);
            PointSet c = random_point_set(rng, 8, 5);
            const double ab = hausdorff(space, a, b);
            CHECK(ab == hausdorff(space, b, a));
            CHECK((ab == 0.0) == (a == b));
            // integer-valued distances make the triangle inequality exact
            CHECK(hausdorff(space, a, c) <= ab + hausdorff(space, b, c));
        }
    }
}

TEST_CASE("multimap images are total and range checked") {
    MultiMap t(2, {PointSet({Point{0}}), PointSet({Point{0}, Point{1}})});
    CHECK(t.image(Point{1}).size() == 2);
    CHECK_THROWS_AS(t.image(Point{2}), std::invalid_argument);
    CHECK_THROWS_AS(MultiMap(2, {PointSet({Point{0}})}), std::invalid_argument);
    CHECK_THROWS_AS(MultiMap(1, {PointSet({Point{1}})}), std::invalid_argument);

    auto line = literal_line_space();
    MultiMap id = MultiMap::identity(line);
    CHECK(id.image(Point{2}) == PointSet({Point{2}}));
    MultiMap c = MultiMap::constant(line, Point{0});
    CHECK(c.image(Point{3}) == PointSet({Point{0}}));
}
