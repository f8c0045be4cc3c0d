#include "mvfp/solver.hpp"

#include "mvfp/text.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mvfp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

std::string pair_text(const MetricSpace& space, Point x, Point y) {
    return "(" + format_number(space.label(x)) + ", " + format_number(space.label(y)) + ")";
}

void csv_cell(std::ostream& out, double value) {
    if (!std::isnan(value)) out << format_number(value);
}

} // namespace

double epsilon_schedule(int n, double alpha_value, double gap) {
    require(n >= 1, "epsilon schedule starts at step 1");
    require(alpha_value >= 0.0 && alpha_value < 1.0, "coefficient must lie in [0, 1)");
    require(gap >= 0.0, "gap must be nonnegative");
    return std::min(std::ldexp(1.0, -n), (1.0 - alpha_value) * gap);
}

Point select_next(const MetricSpace& space, Point x, const PointSet& image,
                  SelectionMode mode, double epsilon, std::mt19937_64& rng) {
    if (mode == SelectionMode::Argmin) return nearest_member(space, x, image);

    require(epsilon >= 0.0, "selection slack must be nonnegative");
    const double dmin = point_set_distance(space, x, image);
    std::vector<Point> candidates;
    for (Point a : image.members()) {
        const double d = space.distance(x, a);
        // epsilon = 0 degenerates to a uniform choice among exact minimizers.
        const bool in = epsilon > 0.0 ? d < dmin + epsilon : d == dmin;
        if (in) candidates.push_back(a);
    }
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return candidates[pick(rng)];
}

IterationTrace iterate_duality(const MetricSpace& space, const MultiMap& s,
                               const MultiMap& t, const AlphaOracle& alpha,
                               Point x0, const SolverConfig& config) {
    require(s.universe_size() == space.size() && t.universe_size() == space.size(),
            "map universe does not match the space");
    require(x0.index >= 0 && x0.index < space.size(), "start point out of range");
    require(config.max_iterations >= 0, "max iterations must be nonnegative");
    require(config.residual_tolerance >= 0.0, "residual tolerance must be nonnegative");

    std::mt19937_64 rng(config.seed);
    IterationTrace trace;

    auto push_point = [&](Point p) {
        trace.points.push_back(p);
        trace.residuals_s.push_back(point_set_distance(space, p, s.image(p)));
        trace.residuals_t.push_back(point_set_distance(space, p, t.image(p)));
    };
    auto converged_at_back = [&] {
        const Point p = trace.points.back();
        const bool exact = s.image(p).contains(p) && t.image(p).contains(p);
        return exact || (trace.residuals_s.back() <= config.residual_tolerance &&
                         trace.residuals_t.back() <= config.residual_tolerance);
    };

    push_point(x0);
    if (converged_at_back()) {
        trace.terminated = Termination::Converged;
        return trace;
    }

    int non_decreasing_run = 0;
    for (int n = 0; n < config.max_iterations; ++n) {
        const Point x = trace.points.back();
        double eps;
        double alpha_n;
        if (n == 0) {
            // First step runs on unit slack; no preceding pair to certify.
            eps = 1.0;
            alpha_n = kNaN;
        } else {
            // Lazy certificate check on the pair this step relies on:
            // odd n pairs (x_{n-1}, x_n), even n pairs (x_n, x_{n-1}).
            const Point prev = trace.points[static_cast<std::size_t>(n) - 1];
            const Point a = (n % 2 == 1) ? prev : x;
            const Point b = (n % 2 == 1) ? x : prev;
            alpha_n = alpha(a, b);
            const double lhs = hausdorff(space, s.image(a), t.image(b));
            const double rhs = alpha_n * m_functional(space, s, t, a, b);
            if (lhs > rhs)
                throw CertificateError("duality violated at pair " + pair_text(space, a, b) +
                                           ": H = " + format_number(lhs) + " exceeds " +
                                           format_number(rhs),
                                       std::make_pair(a, b));
            eps = epsilon_schedule(n, alpha_n, trace.step_gaps.back());
        }

        const PointSet& image = (n % 2 == 0) ? s.image(x) : t.image(x);
        const Point next = select_next(space, x, image, config.selection, eps, rng);

        trace.step_gaps.push_back(space.distance(x, next));
        trace.epsilons.push_back(eps);
        trace.alphas.push_back(alpha_n);
        push_point(next);

        if (converged_at_back()) {
            trace.terminated = Termination::Converged;
            return trace;
        }

        const std::size_t k = trace.step_gaps.size();
        if (k >= 2 && trace.step_gaps[k - 1] >= trace.step_gaps[k - 2]) {
            if (++non_decreasing_run >= 3) {
                trace.terminated = Termination::Stalled;
                trace.note = "step gaps failed to decrease for 3 consecutive steps; "
                             "the declared certificate is suspect";
                return trace;
            }
        } else {
            non_decreasing_run = 0;
        }
    }

    trace.terminated = Termination::MaxIterations;
    return trace;
}

double max_recorded_alpha(const IterationTrace& trace) {
    double worst = -std::numeric_limits<double>::infinity();
    for (double a : trace.alphas)
        if (!std::isnan(a)) worst = std::max(worst, a);
    return worst;
}

LimitReport verify_limit_fixed(const MetricSpace& space, const MultiMap& s,
                               const MultiMap& t, const AlphaOracle& alpha,
                               const IterationTrace& trace, double tol) {
    require(!trace.points.empty(), "trace must contain at least the start point");
    require(tol >= 0.0, "tolerance must be nonnegative");

    LimitReport report;
    const Point limit = trace.final_point();
    report.residual_s = point_set_distance(space, limit, s.image(limit));
    report.residual_t = point_set_distance(space, limit, t.image(limit));
    const bool exact = s.image(limit).contains(limit) && t.image(limit).contains(limit);
    report.is_common_fixed = exact || (report.residual_s <= tol && report.residual_t <= tol);

    // Even-indexed tail window; 32 points is plenty for the asymptotic
    // witness while keeping short traces fully covered. Any window of
    // this shape contains at least one even index.
    const std::size_t size = trace.points.size();
    const std::size_t start = size > 32 ? size - 32 : 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = start; i < size; ++i) {
        if (i % 2 != 0) continue;
        worst = std::max(worst, alpha(trace.points[i], limit));
    }
    report.max_alpha_even_tail = worst;
    report.hypothesis_ok = worst < 1.0;
    return report;
}

bool check_recurrence(std::span<const double> gaps, double gamma) {
    require(gamma >= 0.0 && gamma < 1.0, "gamma must lie in [0, 1)");
    for (std::size_t i = 1; i < gaps.size(); ++i) {
        if (gaps[i] > gamma * gaps[i - 1] + std::ldexp(1.0, -static_cast<int>(i)))
            return false;
    }
    return true;
}

double cauchy_bound(double gamma, int n, int m) {
    return rate_bound(gamma, n, m).value;
}

RateBound rate_bound(double gamma, int n, int m) {
    require(gamma >= 0.0 && gamma < 1.0, "gamma must lie in [0, 1)");
    require(n >= 1, "bound index must be at least 1");
    require(m >= 1, "span must be at least 1");

    RateBound out;
    out.gamma = gamma;
    const double two_gamma = 2.0 * gamma;
    if (two_gamma > 1.0) {
        out.regime = RateRegime::TwoGammaAboveOne;
        out.value = 4.0 * std::pow(gamma, n + 1) / ((two_gamma - 1.0) * (1.0 - gamma));
    } else if (two_gamma < 1.0) {
        out.regime = RateRegime::TwoGammaBelowOne;
        out.value = 1.0 / ((1.0 - gamma) * (1.0 - two_gamma) * std::ldexp(1.0, n - 1));
    } else {
        // Boundary case keeps the dependence on the span m: the tail is a
        // finite sum rather than a geometric series.
        out.regime = RateRegime::TwoGammaEqualsOne;
        double sum = 0.0;
        for (int j = 0; j <= n; ++j) sum += std::pow(gamma, n - j) * std::ldexp(1.0, -j);
        for (int k = n + 1; k <= n + m - 1; ++k) sum += std::ldexp(1.0, -k);
        out.value = sum / (1.0 - gamma);
    }
    return out;
}

void write_trace_csv(std::ostream& out, const MetricSpace& space, const IterationTrace& trace) {
    out << "step,point,gap,epsilon,alpha,residual_S,residual_T\n";
    for (std::size_t i = 0; i < trace.points.size(); ++i) {
        out << i << ',' << format_number(space.label(trace.points[i])) << ',';
        const bool has_step = i < trace.step_gaps.size();
        csv_cell(out, has_step ? trace.step_gaps[i] : kNaN);
        out << ',';
        csv_cell(out, has_step ? trace.epsilons[i] : kNaN);
        out << ',';
        csv_cell(out, has_step ? trace.alphas[i] : kNaN);
        out << ',' << format_number(trace.residuals_s[i]) << ','
            << format_number(trace.residuals_t[i]) << '\n';
    }
}

} // namespace mvfp
