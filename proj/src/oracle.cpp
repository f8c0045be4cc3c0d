#include "mvfp/oracle.hpp"

#include "mvfp/text.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace mvfp {

namespace {

// Inline re-derivation of the comparison functional from metric
// primitives; deliberately not the contraction module's implementation.
double functional_value(const MetricSpace& space, const MultiMap& s, const MultiMap& t,
                        Point x, Point y) {
    double value = space.distance(x, y);
    value = std::max(value, point_set_distance(space, x, s.image(x)));
    value = std::max(value, point_set_distance(space, y, t.image(y)));
    const double cross = 0.5 * (point_set_distance(space, x, t.image(y)) +
                                point_set_distance(space, y, s.image(x)));
    return std::max(value, cross);
}

// Distinct dyadic coordinates on the k/16 lattice; dyadic values keep the
// derived distances and their halves exactly representable.
std::vector<double> draw_coordinates(std::mt19937_64& rng, int n) {
    std::set<int> lattice;
    std::uniform_int_distribution<int> pick(0, 8 * n + 8);
    while (static_cast<int>(lattice.size()) < n) lattice.insert(pick(rng));
    std::vector<double> coords;
    coords.reserve(static_cast<std::size_t>(n));
    for (int k : lattice) coords.push_back(k / 16.0);
    return coords;
}

PointSet random_subset(std::mt19937_64& rng, const std::vector<Point>& pool, int max_size) {
    std::uniform_int_distribution<int> size_pick(1, std::max(1, max_size));
    const int want = std::min<int>(size_pick(rng), static_cast<int>(pool.size()));
    std::vector<Point> chosen(pool);
    std::shuffle(chosen.begin(), chosen.end(), rng);
    chosen.resize(static_cast<std::size_t>(want));
    return PointSet(std::move(chosen));
}

std::optional<CertifiedInstance> generate_constructive(std::mt19937_64& rng, int n) {
    // Images live in a ball of radius beta*d(x, anchor) around the anchor
    // with beta = 0.98*alpha/(2+alpha). Then for any pair,
    //   H(Sx,Ty) <= beta*(d(x,p)+d(y,p))  and
    //   M(x,y)  >= (1-beta)*(d(x,p)+d(y,p))/2,
    // so H <= [2*beta/(1-beta)]*M < alpha*M. The 2% slack keeps float
    // rounding from crossing the boundary; the exhaustive verification
    // below is still the authority.
    for (int attempt = 0; attempt < 64; ++attempt) {
        MetricSpace space = MetricSpace::from_coordinates(draw_coordinates(rng, n));
        std::uniform_int_distribution<int> pick_point(0, n - 1);
        const Point anchor{pick_point(rng)};
        std::uniform_real_distribution<double> pick_alpha(0.0, 0.9);
        const double alpha = pick_alpha(rng);
        const double beta = 0.98 * alpha / (2.0 + alpha);

        auto draw_map = [&] {
            std::vector<PointSet> images;
            images.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const double radius = beta * space.distance(Point{i}, anchor);
                std::vector<Point> ball;
                for (int j = 0; j < n; ++j)
                    if (space.distance(Point{j}, anchor) <= radius) ball.push_back(Point{j});
                // The anchor is always inside its own ball.
                images.push_back(random_subset(rng, ball, 3));
            }
            return MultiMap(n, std::move(images));
        };

        CertifiedInstance inst{space, draw_map(), draw_map(), alpha, anchor};
        if (verify_duality_exhaustive(inst.space, inst.s, inst.t, inst.spec()).passed)
            return inst;
    }
    return std::nullopt;
}

std::optional<CertifiedInstance> generate_rejection(std::mt19937_64& rng, int n) {
    constexpr int kBudget = 100000;
    constexpr double kAlphaSweep[] = {0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

    for (int attempt = 0; attempt < kBudget; ++attempt) {
        MetricSpace space = MetricSpace::from_coordinates(draw_coordinates(rng, n));
        std::vector<Point> universe = space.points();
        auto draw_map = [&] {
            std::vector<PointSet> images;
            images.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) images.push_back(random_subset(rng, universe, n));
            return MultiMap(n, std::move(images));
        };
        MultiMap s = draw_map();
        MultiMap t = draw_map();

        for (double alpha : kAlphaSweep) {
            CertifiedInstance inst{space, s, t, alpha, Point{0}};
            if (verify_duality_exhaustive(inst.space, inst.s, inst.t, inst.spec()).passed)
                return inst;
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<Point> enumerate_fixed_points(const MetricSpace& space, const MultiMap& t) {
    if (t.universe_size() != space.size())
        throw std::invalid_argument("map universe does not match the space");
    std::vector<Point> fixed;
    for (Point x : space.points())
        if (t.image(x).contains(x)) fixed.push_back(x);
    return fixed;
}

std::vector<Point> enumerate_endpoints(const MetricSpace& space, const MultiMap& t) {
    if (t.universe_size() != space.size())
        throw std::invalid_argument("map universe does not match the space");
    std::vector<Point> ends;
    for (Point x : space.points())
        if (t.image(x).size() == 1 && t.image(x).members().front() == x) ends.push_back(x);
    return ends;
}

CertificateReport verify_duality_exhaustive(const MetricSpace& space, const MultiMap& s,
                                            const MultiMap& t, const ContractionSpec& spec) {
    if (s.universe_size() != space.size() || t.universe_size() != space.size())
        throw std::invalid_argument("map universe does not match the space");

    CertificateReport report;
    report.kind = spec.kind;

    const bool weakly = spec.kind == CertificateKind::WeaklyContractive;
    if (weakly) {
        if (!spec.gap) throw CertificateError("certificate declares no gap oracle");
        if (!(s == t))
            throw CertificateError(
                "weakly-contractive certificate applies to a single map (S must equal T)");
        // Compact positivity, re-derived pointwise: every pair at positive
        // distance must have a positive gap.
        for (Point x : space.points()) {
            for (Point y : space.points()) {
                if (space.distance(x, y) > 0.0 && !((*spec.gap)(x, y) > 0.0)) {
                    report.premise_ok = false;
                    report.passed = false;
                    report.note = "gap is not compactly positive at a pair with d = " +
                                  format_number(space.distance(x, y));
                    break;
                }
            }
            if (!report.premise_ok) break;
        }
    }
    if (spec.kind == CertificateKind::PhiDuality) {
        if (!spec.phi) throw CertificateError("certificate declares no gauge");
        if ((*spec.phi)(0.0) != 0.0)
            throw CertificateError("gauge has phi(0) != 0");
    }
    if ((spec.kind == CertificateKind::ConstantAlpha ||
         spec.kind == CertificateKind::AlphaDuality) && !spec.alpha)
        throw CertificateError("certificate declares no coefficient oracle");

    for (Point x : space.points()) {
        for (Point y : space.points()) {
            double lhs;
            double rhs;
            if (weakly) {
                lhs = hausdorff(space, t.image(x), t.image(y));
                rhs = space.distance(x, y) - (*spec.gap)(x, y);
            } else {
                lhs = hausdorff(space, s.image(x), t.image(y));
                const double m = functional_value(space, s, t, x, y);
                if (spec.kind == CertificateKind::PhiDuality) {
                    const double bound = (*spec.phi)(m);
                    if (m > 0.0 && bound >= m)
                        throw CertificateError("gauge is not below the identity at t = " +
                                                   format_number(m),
                                               std::make_pair(x, y));
                    rhs = bound;
                } else {
                    rhs = (*spec.alpha)(x, y) * m;
                }
            }
            const double margin = lhs - rhs;
            ++report.pairs_checked;
            if (!report.worst_pair || margin > report.worst_margin) {
                report.worst_pair = std::make_pair(x, y);
                report.worst_margin = margin;
            }
            if (margin > 0.0) report.passed = false;
        }
    }
    return report;
}

ContractionSpec CertifiedInstance::spec() const {
    ContractionSpec out;
    out.kind = CertificateKind::ConstantAlpha;
    out.alpha = AlphaOracle::constant(alpha_value);
    return out;
}

std::optional<CertifiedInstance> generate_certified_instance(std::uint64_t seed, int n,
                                                             InstanceFamily family) {
    if (n < 1) throw std::invalid_argument("instance needs at least one point");
    std::mt19937_64 rng(seed);
    if (family == InstanceFamily::Constructive) return generate_constructive(rng, n);
    return generate_rejection(rng, n);
}

} // namespace mvfp
