#pragma once

#include "mvfp/contraction.hpp"
#include "mvfp/metric.hpp"
#include "mvfp/multimap.hpp"

#include <optional>
#include <vector>

namespace mvfp {

// H({x}, Tx) = max_{y in Tx} d(x,y); zero exactly when Tx = {x}.
double endpoint_gap(const MetricSpace& space, const MultiMap& t, Point x);

// endpoint_gap for S plus endpoint_gap for T; zero exactly at a common
// endpoint of both maps.
double combined_gap(const MetricSpace& space, const MultiMap& s, const MultiMap& t, Point x);

struct EndpointScan {
    std::vector<Point> order;        // points sorted by combined gap, ties by index
    std::vector<double> gaps;        // combined gap per point, same order
    double infimum = 0.0;            // gaps.front()
    Point best() const { return order.front(); }
};

// Certificate-free scan of the whole universe. The infimum over a finite
// space is attained, so this decides the approximate-endpoint property
// exactly.
EndpointScan approximate_endpoint_scan(const MetricSpace& space, const MultiMap& s,
                                       const MultiMap& t);

struct EndpointResult {
    std::optional<Point> endpoint;     // set when the best combined gap <= tol
    std::vector<Point> minimizing_sequence; // scan order
    std::vector<double> sequence_gaps;
    double final_gap = 0.0;            // best combined gap
    CertificateKind certificate_kind = CertificateKind::ConstantAlpha;
    // Max coefficient seen among near-minimizing points (combined gap
    // <= 10*tol); falsification-only surrogate for the asymptotic
    // coefficient condition. NaN when that tail is empty.
    double tail_alpha = 0.0;
    bool tail_condition_ok = true;
    bool unique = true;                // no second point with gap <= tol at distance > tol
};

// Builds the minimizing sequence by sorting points on combined gap,
// verifies the declared certificate's chain inequality at each
// consecutive pair (alpha route: M <= alpha*M + 2*gap_S(a) + 2*gap_T(b);
// phi route: M <= phi(M) + the same slack), throwing CertificateError on
// violation, then reports the best point as endpoint iff its combined gap
// is <= tol. A found endpoint is re-validated directly (both image
// Hausdorff gaps <= tol) and scanned for uniqueness.
EndpointResult find_common_endpoint(const MetricSpace& space, const MultiMap& s,
                                    const MultiMap& t, const ContractionSpec& spec,
                                    double tol);

} // namespace mvfp
