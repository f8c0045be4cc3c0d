#include "mvfp/endpoint.hpp"

#include "mvfp/text.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mvfp {

namespace {

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

std::string pair_text(const MetricSpace& space, Point x, Point y) {
    return "(" + format_number(space.label(x)) + ", " + format_number(space.label(y)) + ")";
}

} // namespace

double endpoint_gap(const MetricSpace& space, const MultiMap& t, Point x) {
    require(t.universe_size() == space.size(), "map universe does not match the space");
    double worst = 0.0;
    for (Point y : t.image(x).members()) worst = std::max(worst, space.distance(x, y));
    return worst;
}

double combined_gap(const MetricSpace& space, const MultiMap& s, const MultiMap& t, Point x) {
    return endpoint_gap(space, s, x) + endpoint_gap(space, t, x);
}

EndpointScan approximate_endpoint_scan(const MetricSpace& space, const MultiMap& s,
                                       const MultiMap& t) {
    EndpointScan scan;
    const int n = space.size();
    scan.order.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) scan.order[static_cast<std::size_t>(i)] = Point{i};

    std::vector<double> gap_by_index(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        gap_by_index[static_cast<std::size_t>(i)] = combined_gap(space, s, t, Point{i});

    // Stable sort keeps index order among equal gaps, so the minimizing
    // sequence is canonical.
    std::stable_sort(scan.order.begin(), scan.order.end(), [&](Point a, Point b) {
        return gap_by_index[static_cast<std::size_t>(a.index)] <
               gap_by_index[static_cast<std::size_t>(b.index)];
    });

    scan.gaps.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < scan.order.size(); ++i)
        scan.gaps[i] = gap_by_index[static_cast<std::size_t>(scan.order[i].index)];
    scan.infimum = scan.gaps.front();
    return scan;
}

EndpointResult find_common_endpoint(const MetricSpace& space, const MultiMap& s,
                                    const MultiMap& t, const ContractionSpec& spec,
                                    double tol) {
    require(tol >= 0.0, "tolerance must be nonnegative");
    require(s.universe_size() == space.size() && t.universe_size() == space.size(),
            "map universe does not match the space");

    const EndpointScan scan = approximate_endpoint_scan(space, s, t);

    // Chain inequality along consecutive pairs of the minimizing sequence.
    // The certificate bounds M(a,b) by its own contraction term plus twice
    // the endpoint gaps; a violation means the declared certificate is
    // inconsistent with the map data.
    const bool phi_route = spec.kind == CertificateKind::PhiDuality;
    if (phi_route && !spec.phi) throw CertificateError("certificate declares no gauge");
    std::optional<AlphaOracle> alpha;
    if (!phi_route) alpha = effective_alpha(spec, space, s, t);
    for (std::size_t i = 0; i + 1 < scan.order.size(); ++i) {
        const Point a = scan.order[i];
        const Point b = scan.order[i + 1];
        const double m = m_functional(space, s, t, a, b);
        const double slack = 2.0 * endpoint_gap(space, s, a) + 2.0 * endpoint_gap(space, t, b);
        const double contraction = phi_route ? (*spec.phi)(m) : (*alpha)(a, b) * m;
        if (m > contraction + slack)
            throw CertificateError("endpoint chain inequality violated at pair " +
                                       pair_text(space, a, b) + ": M = " + format_number(m) +
                                       " exceeds " + format_number(contraction + slack),
                                   std::make_pair(a, b));
    }

    EndpointResult result;
    result.minimizing_sequence = scan.order;
    result.sequence_gaps = scan.gaps;
    result.final_gap = scan.infimum;
    result.certificate_kind = spec.kind;

    // Falsification-only tail condition: coefficient stays below 1 among
    // near-minimizing points.
    const double tail_window = 10.0 * tol;
    double tail_alpha = -std::numeric_limits<double>::infinity();
    if (!phi_route) {
        for (std::size_t i = 0; i < scan.order.size(); ++i) {
            if (scan.gaps[i] > tail_window) break;
            for (std::size_t j = 0; j < scan.order.size(); ++j) {
                if (scan.gaps[j] > tail_window) break;
                tail_alpha = std::max(tail_alpha, (*alpha)(scan.order[i], scan.order[j]));
            }
        }
    }
    if (std::isinf(tail_alpha)) {
        result.tail_alpha = std::numeric_limits<double>::quiet_NaN();
        result.tail_condition_ok = true; // nothing in the window to falsify with
    } else {
        result.tail_alpha = tail_alpha;
        result.tail_condition_ok = tail_alpha < 1.0;
    }

    if (scan.infimum <= tol) {
        const Point best = scan.best();
        // Direct re-validation, independent of the scan's arithmetic.
        const double hs = hausdorff(space, PointSet({best}), s.image(best));
        const double ht = hausdorff(space, PointSet({best}), t.image(best));
        if (hs <= tol && ht <= tol) {
            result.endpoint = best;
            // Uniqueness scan: another point this flat at positive
            // distance would contradict the certificate.
            for (std::size_t i = 1; i < scan.order.size(); ++i) {
                if (scan.gaps[i] > tol) break;
                if (space.distance(best, scan.order[i]) > tol) {
                    result.unique = false;
                    break;
                }
            }
        }
    }
    return result;
}

} // namespace mvfp
