#include "mvfp/contraction.hpp"

#include "mvfp/text.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <utility>

namespace mvfp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

void require_compatible(const MetricSpace& space, const MultiMap& m) {
    require(m.universe_size() == space.size(), "map universe does not match the space");
}

// Ordered pairs to visit: every (x,y) when exhaustive, otherwise `count`
// draws with replacement from a fixed-seed engine.
std::vector<std::pair<Point, Point>> selected_pairs(const MetricSpace& space,
                                                    const PairSelection& sel) {
    std::vector<std::pair<Point, Point>> out;
    const int n = space.size();
    if (sel.exhaustive) {
        out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.push_back({Point{i}, Point{j}});
        return out;
    }
    require(sel.count >= 0, "pair sample count must be nonnegative");
    std::mt19937_64 rng(sel.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    out.reserve(static_cast<std::size_t>(sel.count));
    for (long long k = 0; k < sel.count; ++k) out.push_back({Point{pick(rng)}, Point{pick(rng)}});
    return out;
}

void record_margin(CertificateReport& report, Point x, Point y, double margin) {
    ++report.pairs_checked;
    if (!report.worst_pair || margin > report.worst_margin) {
        report.worst_pair = std::make_pair(x, y);
        report.worst_margin = margin;
    }
    if (margin > 0.0) report.passed = false;
}

// Realized off-diagonal distance values, ascending and deduplicated.
std::vector<double> realized_distances(const MetricSpace& space) {
    std::set<double> values;
    for (int i = 0; i < space.size(); ++i)
        for (int j = i + 1; j < space.size(); ++j)
            values.insert(space.distance(Point{i}, Point{j}));
    return {values.begin(), values.end()};
}

} // namespace

std::string to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::ConstantAlpha: return "constant-alpha";
        case CertificateKind::AlphaDuality: return "alpha-duality";
        case CertificateKind::PhiDuality: return "phi-duality";
        case CertificateKind::WeaklyContractive: return "weakly-contractive";
    }
    return "unknown";
}

AlphaOracle::AlphaOracle(std::function<double(Point, Point)> fn, std::string name)
    : fn_(std::move(fn)), name_(std::move(name)) {
    require(static_cast<bool>(fn_), "alpha oracle needs a callable");
}

AlphaOracle AlphaOracle::constant(double value) {
    if (!(value >= 0.0 && value < 1.0))
        throw CertificateError("coefficient " + format_number(value) +
                               " is outside [0, 1)");
    return {[value](Point, Point) { return value; }, "constant " + format_number(value)};
}

double AlphaOracle::operator()(Point x, Point y) const {
    const double v = fn_(x, y);
    if (!(v >= 0.0 && v < 1.0))
        throw CertificateError("coefficient " + format_number(v) + " at pair (" +
                                   std::to_string(x.index) + ", " + std::to_string(y.index) +
                                   ") is outside [0, 1)",
                               std::make_pair(x, y));
    return v;
}

Gauge::Gauge(std::function<double(double)> fn, std::string name)
    : fn_(std::move(fn)), name_(std::move(name)) {
    require(static_cast<bool>(fn_), "gauge needs a callable");
}

Gauge Gauge::linear(double c) {
    if (!(c >= 0.0 && c < 1.0))
        throw CertificateError("gauge coefficient " + format_number(c) + " is outside [0, 1)");
    return {[c](double t) { return c * t; }, "linear " + format_number(c)};
}

Gauge Gauge::rational() {
    return {[](double t) { return t / (1.0 + t); }, "rational"};
}

Gauge Gauge::zero() {
    return {[](double) { return 0.0; }, "zero"};
}

double Gauge::operator()(double t) const {
    require(t >= 0.0, "gauge argument must be nonnegative");
    const double v = fn_(t);
    if (!(v >= 0.0))
        throw CertificateError("gauge value " + format_number(v) + " at t = " +
                               format_number(t) + " is negative");
    return v;
}

GapOracle::GapOracle(std::function<double(Point, Point)> fn, std::string name)
    : fn_(std::move(fn)), name_(std::move(name)) {
    require(static_cast<bool>(fn_), "gap oracle needs a callable");
}

GapOracle GapOracle::half_distance(const MetricSpace& space) {
    return {[space](Point x, Point y) { return space.distance(x, y) / 2.0; }, "half-distance"};
}

GapOracle GapOracle::scaled_distance(const MetricSpace& space, double c) {
    require(c > 0.0 && c < 1.0, "gap scale must lie in (0, 1)");
    return {[space, c](Point x, Point y) { return c * space.distance(x, y); },
            "scaled-distance " + format_number(c)};
}

GapOracle GapOracle::constant(double c) {
    require(c > 0.0, "constant gap must be positive");
    return {[c](Point x, Point y) { return x == y ? 0.0 : c; }, "constant " + format_number(c)};
}

double GapOracle::operator()(Point x, Point y) const {
    const double v = fn_(x, y);
    if (!(v >= 0.0))
        throw CertificateError("gap value " + format_number(v) + " at pair (" +
                                   std::to_string(x.index) + ", " + std::to_string(y.index) +
                                   ") is negative",
                               std::make_pair(x, y));
    return v;
}

PairSelection PairSelection::all() {
    return {};
}

PairSelection PairSelection::sample(long long count, std::uint64_t seed) {
    PairSelection s;
    s.exhaustive = false;
    s.count = count;
    s.seed = seed;
    return s;
}

double m_functional(const MetricSpace& space, const MultiMap& s, const MultiMap& t,
                    Point x, Point y) {
    require_compatible(space, s);
    require_compatible(space, t);
    const double dxy = space.distance(x, y);
    const double x_to_sx = point_set_distance(space, x, s.image(x));
    const double y_to_ty = point_set_distance(space, y, t.image(y));
    const double cross = (point_set_distance(space, x, t.image(y)) +
                          point_set_distance(space, y, s.image(x))) / 2.0;
    return std::max({dxy, x_to_sx, y_to_ty, cross});
}

double n_functional(const MetricSpace& space, const MultiMap& t, Point x, Point y) {
    return m_functional(space, t, t, x, y);
}

CertificateReport check_alpha_duality(const MetricSpace& space, const MultiMap& s,
                                      const MultiMap& t, const AlphaOracle& alpha,
                                      const PairSelection& pairs) {
    require_compatible(space, s);
    require_compatible(space, t);
    CertificateReport report;
    report.kind = CertificateKind::AlphaDuality;
    for (const auto& [x, y] : selected_pairs(space, pairs)) {
        const double lhs = hausdorff(space, s.image(x), t.image(y));
        const double rhs = alpha(x, y) * m_functional(space, s, t, x, y);
        record_margin(report, x, y, lhs - rhs);
    }
    return report;
}

CertificateReport check_phi_duality(const MetricSpace& space, const MultiMap& s,
                                    const MultiMap& t, const Gauge& phi,
                                    const PairSelection& pairs) {
    require_compatible(space, s);
    require_compatible(space, t);
    // Gauge premise first, before any pair: phi(0) = 0 and phi below the
    // identity on every realized distance.
    if (phi(0.0) != 0.0)
        throw CertificateError("gauge " + phi.name() + " has phi(0) = " +
                               format_number(phi(0.0)) + ", must be 0");
    for (double d : realized_distances(space)) {
        if (phi(d) >= d)
            throw CertificateError("gauge " + phi.name() + " is not below the identity: phi(" +
                                   format_number(d) + ") = " + format_number(phi(d)));
    }

    CertificateReport report;
    report.kind = CertificateKind::PhiDuality;
    for (const auto& [x, y] : selected_pairs(space, pairs)) {
        const double m = m_functional(space, s, t, x, y);
        const double bound = phi(m);
        if (m > 0.0 && bound >= m)
            throw CertificateError("gauge " + phi.name() + " is not below the identity: phi(" +
                                       format_number(m) + ") = " + format_number(bound),
                                   std::make_pair(x, y));
        const double lhs = hausdorff(space, s.image(x), t.image(y));
        record_margin(report, x, y, lhs - bound);
    }
    return report;
}

CertificateReport check_weakly_contractive(const MetricSpace& space, const MultiMap& t,
                                           const GapOracle& gap, const PairSelection& pairs) {
    require_compatible(space, t);
    CertificateReport report;
    report.kind = CertificateKind::WeaklyContractive;

    // Compact positivity over every realized band [v, v]: on a finite
    // space the band infima reduce to these singletons. Non-positive
    // distances are the metric's own problem, not the gap's.
    for (double v : realized_distances(space)) {
        if (!(v > 0.0)) continue;
        const double lambda = lambda_band(space, gap, v, v);
        if (!(lambda > 0.0)) {
            report.premise_ok = false;
            report.passed = false;
            report.note = "gap is not compactly positive: inf over band [" + format_number(v) +
                          ", " + format_number(v) + "] is " + format_number(lambda);
            break;
        }
    }

    for (const auto& [x, y] : selected_pairs(space, pairs)) {
        const double lhs = hausdorff(space, t.image(x), t.image(y));
        const double rhs = space.distance(x, y) - gap(x, y);
        record_margin(report, x, y, lhs - rhs);
    }
    if (!report.premise_ok) report.passed = false;
    return report;
}

double lambda_band(const MetricSpace& space, const GapOracle& gap, double a, double b) {
    require(a > 0.0, "band must start above 0");
    require(a <= b, "band must be nonempty");
    double inf = kInf;
    for (int i = 0; i < space.size(); ++i) {
        for (int j = 0; j < space.size(); ++j) {
            const double d = space.distance(Point{i}, Point{j});
            if (d >= a && d <= b) inf = std::min(inf, gap(Point{i}, Point{j}));
        }
    }
    return inf; // +inf sentinel when no pair realizes the band
}

AlphaOracle alpha_from_compact_gap(const GapOracle& gap, const MetricSpace& space) {
    return {[gap, space](Point x, Point y) {
                const double d = space.distance(x, y);
                if (d <= 0.0) return 0.0;
                return 1.0 - gap(x, y) / d;
            },
            "from gap " + gap.name()};
}

AlphaOracle alpha_from_gauge(const Gauge& phi, const MetricSpace& space,
                             const MultiMap& s, const MultiMap& t) {
    require_compatible(space, s);
    require_compatible(space, t);
    return {[phi, space, s, t](Point x, Point y) {
                const double m = m_functional(space, s, t, x, y);
                if (m <= 0.0) return 0.0;
                return phi(m) / m;
            },
            "from gauge " + phi.name()};
}

std::vector<double> default_gauge_grid() {
    // 200 log-spaced points across [1e-9, 1e6].
    constexpr int kCount = 200;
    constexpr double kLo = 1e-9;
    constexpr double kHi = 1e6;
    std::vector<double> grid(kCount);
    const double ratio = std::log(kHi / kLo) / (kCount - 1);
    for (int i = 0; i < kCount; ++i) grid[static_cast<std::size_t>(i)] = kLo * std::exp(ratio * i);
    grid.back() = kHi;
    return grid;
}

GaugeConditionReport check_gauge_conditions(const Gauge& phi, std::span<const double> t_grid) {
    require(!t_grid.empty(), "gauge grid must be nonempty");
    GaugeConditionReport report;
    report.note = "sampled, falsification-only";
    report.zero_at_zero = phi(0.0) == 0.0;
    report.below_identity = true;

    constexpr double kNearZero = 1e-3;
    constexpr double kLargeT = 1e3;
    double max_ratio = -kInf;
    double near_zero_ratio = -kInf;
    double large_slack = kInf;
    bool saw_near_zero = false;
    bool saw_large = false;

    for (double t : t_grid) {
        require(t > 0.0, "gauge grid samples must be positive");
        const double value = phi(t);
        if (value >= t) report.below_identity = false;
        const double ratio = value / t;
        max_ratio = std::max(max_ratio, ratio);
        if (t < kNearZero) {
            near_zero_ratio = std::max(near_zero_ratio, ratio);
            saw_near_zero = true;
        }
        if (t > kLargeT) {
            large_slack = std::min(large_slack, t - value);
            saw_large = true;
        }
    }

    report.max_ratio = max_ratio;
    report.ratio_near_zero = saw_near_zero ? near_zero_ratio
                                           : std::numeric_limits<double>::quiet_NaN();
    report.min_slack_large_t = saw_large ? large_slack
                                         : std::numeric_limits<double>::quiet_NaN();
    report.small_t_ok = saw_near_zero && near_zero_ratio < 1.0;
    report.large_t_ok = saw_large && large_slack > 0.0;
    if (!saw_near_zero || !saw_large)
        report.note += "; grid misses a probe window";
    return report;
}

AlphaOracle effective_alpha(const ContractionSpec& spec, const MetricSpace& space,
                            const MultiMap& s, const MultiMap& t) {
    switch (spec.kind) {
        case CertificateKind::ConstantAlpha:
        case CertificateKind::AlphaDuality:
            if (!spec.alpha) throw CertificateError("certificate declares no coefficient oracle");
            return *spec.alpha;
        case CertificateKind::PhiDuality:
            if (!spec.phi) throw CertificateError("certificate declares no gauge");
            return alpha_from_gauge(*spec.phi, space, s, t);
        case CertificateKind::WeaklyContractive:
            if (!spec.gap) throw CertificateError("certificate declares no gap oracle");
            return alpha_from_compact_gap(*spec.gap, space);
    }
    throw CertificateError("unknown certificate kind");
}

CertificateReport check_certificate(const MetricSpace& space, const MultiMap& s,
                                    const MultiMap& t, const ContractionSpec& spec,
                                    const PairSelection& pairs) {
    switch (spec.kind) {
        case CertificateKind::ConstantAlpha:
        case CertificateKind::AlphaDuality: {
            if (!spec.alpha) throw CertificateError("certificate declares no coefficient oracle");
            CertificateReport report = check_alpha_duality(space, s, t, *spec.alpha, pairs);
            report.kind = spec.kind;
            return report;
        }
        case CertificateKind::PhiDuality:
            if (!spec.phi) throw CertificateError("certificate declares no gauge");
            return check_phi_duality(space, s, t, *spec.phi, pairs);
        case CertificateKind::WeaklyContractive:
            if (!spec.gap) throw CertificateError("certificate declares no gap oracle");
            if (!(s == t))
                throw CertificateError(
                    "weakly-contractive certificate applies to a single map (S must equal T)");
            return check_weakly_contractive(space, t, *spec.gap, pairs);
    }
    throw CertificateError("unknown certificate kind");
}

} // namespace mvfp
