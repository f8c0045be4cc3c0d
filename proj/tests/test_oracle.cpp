#include "mvfp/oracle.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace mvfp;
using namespace mvfp::testsupport;

TEST_CASE("fixed point and endpoint enumeration") {
    auto line = literal_line_space();
    MultiMap map = halving_map();
    CHECK(enumerate_fixed_points(line, map) == std::vector<Point>{Point{0}});
    CHECK(enumerate_endpoints(line, map) == std::vector<Point>{Point{0}});

    MultiMap id = MultiMap::identity(line);
    CHECK(enumerate_fixed_points(line, id).size() == 4);
    CHECK(enumerate_endpoints(line, id).size() == 4);

    auto two = MetricSpace::from_coordinates({0.0, 1.0});
    MultiMap shift(2, {PointSet({Point{1}}), PointSet({Point{0}})});
    CHECK(enumerate_fixed_points(two, shift).empty());
    CHECK(enumerate_endpoints(two, shift).empty());

    // membership without a singleton image: fixed but not an endpoint
    MultiMap fat(2, {PointSet({Point{0}, Point{1}}), PointSet({Point{1}})});
    CHECK(enumerate_fixed_points(two, fat) == std::vector<Point>{Point{0}, Point{1}});
    CHECK(enumerate_endpoints(two, fat) == std::vector<Point>{Point{1}});
}

TEST_CASE("independent verification agrees with the checker on random inputs") {
    std::mt19937_64 rng(424242);
    int disagreements = 0;
    int passing = 0;
    for (int round = 0; round < 40; ++round) {
        MetricSpace space = random_integer_coords_space(rng, 6);
        MultiMap s = random_multimap(rng, 6, 3);
        MultiMap t = random_multimap(rng, 6, 3);
        const double alpha = 0.05 + 0.9 * (round / 40.0);

        ContractionSpec spec;
        spec.kind = CertificateKind::AlphaDuality;
        spec.alpha = AlphaOracle::constant(alpha);

        auto expected = verify_duality_exhaustive(space, s, t, spec);
        auto got = check_alpha_duality(space, s, t, *spec.alpha, PairSelection::all());
        if (expected.passed != got.passed || expected.worst_margin != got.worst_margin ||
            expected.pairs_checked != got.pairs_checked || expected.worst_pair != got.worst_pair)
            ++disagreements;
        if (got.passed) ++passing;
    }
    CHECK(disagreements == 0);
    // random maps mostly fail; the comparison must cover both outcomes
    CHECK(passing < 40);
}

TEST_CASE("independent verification agrees on the gauge route") {
    std::mt19937_64 rng(5150);
    for (int round = 0; round < 20; ++round) {
        MetricSpace space = random_integer_coords_space(rng, 5);
        MultiMap s = random_multimap(rng, 5, 3);
        MultiMap t = random_multimap(rng, 5, 3);

        ContractionSpec spec;
        spec.kind = CertificateKind::PhiDuality;
        spec.phi = Gauge::linear(0.4);

        auto expected = verify_duality_exhaustive(space, s, t, spec);
        auto got = check_phi_duality(space, s, t, *spec.phi, PairSelection::all());
        CHECK(expected.passed == got.passed);
        CHECK(expected.worst_margin == got.worst_margin);
        CHECK(expected.worst_pair == got.worst_pair);
    }
}

TEST_CASE("independent verification agrees on the weakly contractive route") {
    auto space = halving_space();
    MultiMap map = halving_map();
    ContractionSpec spec;
    spec.kind = CertificateKind::WeaklyContractive;
    spec.gap = GapOracle::half_distance(space);

    auto expected = verify_duality_exhaustive(space, map, map, spec);
    auto got = check_weakly_contractive(space, map, *spec.gap, PairSelection::all());
    CHECK(expected.passed);
    CHECK(expected.passed == got.passed);
    CHECK(expected.premise_ok == got.premise_ok);
    CHECK(expected.worst_margin == got.worst_margin);

    // both reject a two-map weak declaration
    MultiMap id = MultiMap::identity(space);
    CHECK_THROWS_AS(verify_duality_exhaustive(space, id, map, spec), CertificateError);
}

TEST_CASE("verification requires the oracle matching the declared kind") {
    auto space = literal_line_space();
    MultiMap map = halving_map();
    ContractionSpec empty;
    empty.kind = CertificateKind::AlphaDuality;
    CHECK_THROWS_AS(verify_duality_exhaustive(space, map, map, empty), CertificateError);
}

TEST_CASE("instance generation is deterministic in the seed") {
    for (InstanceFamily family : {InstanceFamily::Constructive, InstanceFamily::Rejection}) {
        const int n = family == InstanceFamily::Constructive ? 7 : 3;
        auto a = generate_certified_instance(1234, n, family);
        auto b = generate_certified_instance(1234, n, family);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(a->space == b->space);
        CHECK(a->s == b->s);
        CHECK(a->t == b->t);
        CHECK(a->alpha_value == b->alpha_value);
        CHECK(a->anchor == b->anchor);
    }
    CHECK_THROWS_AS(generate_certified_instance(1, 0, InstanceFamily::Constructive),
                    std::invalid_argument);
}

TEST_CASE("constructive instances pin their fixed and endpoint structure") {
    for (std::uint64_t seed = 1; seed <= 24; ++seed) {
        const int n = 1 + static_cast<int>(seed % 12);
        auto inst = generate_certified_instance(seed, n, InstanceFamily::Constructive);
        REQUIRE(inst.has_value());
        REQUIRE(validate_metric(inst->space).valid);
        CHECK(verify_duality_exhaustive(inst->space, inst->s, inst->t, inst->spec()).passed);

        const std::vector<Point> anchor_only{inst->anchor};
        CHECK(enumerate_fixed_points(inst->space, inst->s) == anchor_only);
        CHECK(enumerate_fixed_points(inst->space, inst->t) == anchor_only);
        CHECK(enumerate_endpoints(inst->space, inst->s) == anchor_only);
        CHECK(enumerate_endpoints(inst->space, inst->t) == anchor_only);
    }
}

TEST_CASE("rejection instances satisfy the common structure laws") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const int n = 2 + static_cast<int>(seed % 3);
        auto inst = generate_certified_instance(seed, n, InstanceFamily::Rejection);
        REQUIRE(inst.has_value());
        CHECK(verify_duality_exhaustive(inst->space, inst->s, inst->t, inst->spec()).passed);

        // certified pairs share fixed points and endpoints, and a common
        // endpoint is unique when it exists
        CHECK(enumerate_fixed_points(inst->space, inst->s) ==
              enumerate_fixed_points(inst->space, inst->t));
        auto ends_s = enumerate_endpoints(inst->space, inst->s);
        auto ends_t = enumerate_endpoints(inst->space, inst->t);
        CHECK(ends_s == ends_t);
        CHECK(ends_s.size() <= 1);
        auto fixed = enumerate_fixed_points(inst->space, inst->s);
        for (Point e : ends_s)
            CHECK(std::find(fixed.begin(), fixed.end(), e) != fixed.end());
    }
}
