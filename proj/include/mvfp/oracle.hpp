#pragma once

#include "mvfp/contraction.hpp"
#include "mvfp/metric.hpp"
#include "mvfp/multimap.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mvfp {

// Ground-truth checks used to validate the main pipeline. Everything here
// recomputes from metric primitives (distance, point_set_distance,
// hausdorff) and shares no logic with the contraction/solver/endpoint
// checkers it cross-examines.

// { x : x in Tx }, ascending.
std::vector<Point> enumerate_fixed_points(const MetricSpace& space, const MultiMap& t);

// { x : Tx = {x} }, ascending.
std::vector<Point> enumerate_endpoints(const MetricSpace& space, const MultiMap& t);

// Re-derives the declared certificate over every ordered pair with its own
// inline functional evaluation. Same report shape as the checkers so the
// two can be compared field by field.
CertificateReport verify_duality_exhaustive(const MetricSpace& space, const MultiMap& s,
                                            const MultiMap& t, const ContractionSpec& spec);

enum class InstanceFamily {
    Constructive, // images pulled into a ball around an anchor; certificate holds by construction
    Rejection,    // fully random maps filtered through exhaustive verification
};

struct CertifiedInstance {
    MetricSpace space;
    MultiMap s;
    MultiMap t;
    double alpha_value = 0.0; // constant certificate coefficient
    Point anchor{0};          // constructive family's distinguished point

    ContractionSpec spec() const;
};

// Deterministic in (seed, n, family). Returns nullopt only when the
// rejection family exhausts its attempt budget (10^5 candidate maps).
std::optional<CertifiedInstance> generate_certified_instance(std::uint64_t seed, int n,
                                                             InstanceFamily family);

} // namespace mvfp
