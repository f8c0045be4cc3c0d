#include "mvfp/endpoint.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace mvfp;
using namespace mvfp::testsupport;

namespace {

ContractionSpec constant_spec(double alpha) {
    ContractionSpec spec;
    spec.kind = CertificateKind::ConstantAlpha;
    spec.alpha = AlphaOracle::constant(alpha);
    return spec;
}

} // namespace

TEST_CASE("endpoint gap is the farthest image member") {
    auto line = literal_line_space();
    MultiMap map = halving_map();
    CHECK(endpoint_gap(line, map, Point{0}) == 0.0);
    CHECK(endpoint_gap(line, map, Point{1}) == 1.0);
    CHECK(endpoint_gap(line, map, Point{3}) == 2.0);
    CHECK(combined_gap(line, map, map, Point{1}) == 2.0);

    // a fixed point with a fat image is not an endpoint
    MultiMap fat(4, {PointSet({Point{0}, Point{1}}), PointSet({Point{1}}),
                     PointSet({Point{2}}), PointSet({Point{3}})});
    CHECK(endpoint_gap(line, fat, Point{0}) == 1.0);
}

TEST_CASE("the scan orders points by combined gap with index ties") {
    auto line = literal_line_space();
    MultiMap map = halving_map();
    EndpointScan scan = approximate_endpoint_scan(line, map, map);
    REQUIRE(scan.order.size() == 4);
    CHECK(scan.order[0] == Point{0});
    CHECK(scan.order[1] == Point{1}); // ties with label 2, lower index first
    CHECK(scan.order[2] == Point{2});
    CHECK(scan.order[3] == Point{3});
    CHECK(scan.gaps[0] == 0.0);
    CHECK(scan.gaps[1] == 2.0);
    CHECK(scan.gaps[2] == 2.0);
    CHECK(scan.gaps[3] == 4.0);
    CHECK(scan.infimum == 0.0);
    CHECK(scan.best() == Point{0});
}

TEST_CASE("a fixed-point-free pair has a positive scan infimum") {
    auto space = MetricSpace::from_coordinates({0.0, 1.0});
    MultiMap s = MultiMap::identity(space);
    MultiMap t(2, {PointSet({Point{1}}), PointSet({Point{0}})});
    EndpointScan scan = approximate_endpoint_scan(space, s, t);
    CHECK(scan.infimum == 1.0);
}

TEST_CASE("the halving chain yields the unique endpoint at 0") {
    auto space = halving_space();
    MultiMap map = halving_map();
    EndpointResult result = find_common_endpoint(space, map, map, constant_spec(0.5), 0.0);

    REQUIRE(result.endpoint.has_value());
    CHECK(space.label(*result.endpoint) == 0.0);
    CHECK(result.unique);
    CHECK(result.final_gap == 0.0);
    CHECK(result.tail_alpha == 0.5); // only the endpoint itself sits in the tail window
    CHECK(result.tail_condition_ok);
    REQUIRE(result.minimizing_sequence.size() == 4);
    CHECK(space.label(result.minimizing_sequence.front()) == 0.0);
    CHECK(space.label(result.minimizing_sequence.back()) == 4.0);
    CHECK(result.sequence_gaps == std::vector<double>{0.0, 2.0, 4.0, 8.0});
}

TEST_CASE("the phi route reports no tail coefficient") {
    auto space = halving_space();
    MultiMap map = halving_map();
    ContractionSpec spec;
    spec.kind = CertificateKind::PhiDuality;
    spec.phi = Gauge::linear(0.5);
    EndpointResult result = find_common_endpoint(space, map, map, spec, 0.0);
    REQUIRE(result.endpoint.has_value());
    CHECK(space.label(*result.endpoint) == 0.0);
    CHECK(std::isnan(result.tail_alpha));
    CHECK(result.tail_condition_ok);
    CHECK(result.certificate_kind == CertificateKind::PhiDuality);
}

TEST_CASE("two genuine endpoints contradict any declared coefficient") {
    auto space = literal_line_space();
    MultiMap id = MultiMap::identity(space);
    CHECK_THROWS_AS(find_common_endpoint(space, id, id, constant_spec(0.5), 0.0),
                    CertificateError);
}

TEST_CASE("a fixed-point-free shift reports the honest positive infimum") {
    auto space = MetricSpace::from_coordinates({0.0, 1.0});
    MultiMap s = MultiMap::identity(space);
    MultiMap t(2, {PointSet({Point{1}}), PointSet({Point{0}})});
    EndpointResult result = find_common_endpoint(space, s, t, constant_spec(0.5), 0.0);
    CHECK_FALSE(result.endpoint.has_value());
    CHECK(result.final_gap == 1.0);
    CHECK(std::isnan(result.tail_alpha)); // nothing within the zero-width window
}

TEST_CASE("a loose tolerance can blur uniqueness and says so") {
    // 0 is an exact endpoint; 2 hovers within the tolerance window but
    // sits at distance 2 > tol from it, so the result is flagged.
    auto space = MetricSpace::from_coordinates({0.0, 2.0, 2.5});
    MultiMap map(3, {PointSet({Point{0}}), PointSet({Point{2}}), PointSet({Point{1}})});
    EndpointResult result = find_common_endpoint(space, map, map, constant_spec(0.6), 1.0);
    REQUIRE(result.endpoint.has_value());
    CHECK(space.label(*result.endpoint) == 0.0);
    CHECK_FALSE(result.unique);
}

TEST_CASE("tolerance must be nonnegative") {
    auto space = halving_space();
    MultiMap map = halving_map();
    CHECK_THROWS_AS(find_common_endpoint(space, map, map, constant_spec(0.5), -1.0),
                    std::invalid_argument);
}
