#pragma once

#include "mvfp/contraction.hpp"
#include "mvfp/metric.hpp"
#include "mvfp/multimap.hpp"

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

namespace mvfp {

enum class SelectionMode {
    Argmin,       // nearest image member, ties by lowest index (deterministic)
    EpsilonSlack, // uniform choice among members within epsilon of the nearest
};

enum class Termination { Converged, MaxIterations, Stalled };

struct SolverConfig {
    SelectionMode selection = SelectionMode::Argmin;
    int max_iterations = 1000;
    double residual_tolerance = 1e-9;
    std::uint64_t seed = 0; // used by EpsilonSlack only
};

// Full record of one alternating run. With k steps taken there are k+1
// points; the per-step arrays have k entries and the per-point residual
// arrays k+1. alphas[0] is NaN (no pair precedes the first step).
struct IterationTrace {
    std::vector<Point> points;
    std::vector<double> step_gaps;    // d(x_n, x_{n+1})
    std::vector<double> epsilons;     // slack granted at each step
    std::vector<double> alphas;       // coefficient used at each step
    std::vector<double> residuals_s;  // d(x_n, S x_n)
    std::vector<double> residuals_t;  // d(x_n, T x_n)
    Termination terminated = Termination::Converged;
    std::string note;                 // stall suspicion detail, if any

    Point final_point() const { return points.back(); }
    int steps() const { return static_cast<int>(points.size()) - 1; }
};

// min(2^-n, (1 - alpha) * gap), the shrinking slack granted at step n >= 1.
// Requires n >= 1, alpha in [0,1), gap >= 0.
double epsilon_schedule(int n, double alpha_value, double gap);

// Picks the next iterate from `image`. Argmin ignores epsilon and rng.
// EpsilonSlack with epsilon > 0 draws uniformly among members with
// d(x, a) < d(x, image) + epsilon; with epsilon = 0 it draws uniformly
// among the exact minimizers.
Point select_next(const MetricSpace& space, Point x, const PointSet& image,
                  SelectionMode mode, double epsilon, std::mt19937_64& rng);

// Alternating iteration x_{n+1} in S x_n (n even), x_{n+1} in T x_n
// (n odd), with the epsilon schedule above. The declared certificate is
// checked lazily along the trace: before step n >= 1 the pairwise
// inequality H(Sa,Tb) <= alpha(a,b) M(a,b) must hold at (a,b) =
// (x_{n-1}, x_n) for odd n and (x_n, x_{n-1}) for even n; a violation
// raises CertificateError naming the pair. Terminates when both residuals
// are within tolerance (or the point is exactly in both images), when
// max_iterations steps were taken, or when the step gaps fail to decrease
// three times in a row (stall; impossible when the certificate holds,
// kept as a defensive report).
IterationTrace iterate_duality(const MetricSpace& space, const MultiMap& s,
                               const MultiMap& t, const AlphaOracle& alpha,
                               Point x0, const SolverConfig& config);

// max over recorded alphas (NaN entries skipped); -inf for an empty trace.
double max_recorded_alpha(const IterationTrace& trace);

struct LimitReport {
    bool is_common_fixed = false; // both residuals at the final point <= tol
    double residual_s = 0.0;
    double residual_t = 0.0;
    // Limit-hypothesis witness: max alpha(x_{2k}, x*) over even-indexed
    // points in the trace tail; must stay below 1.
    double max_alpha_even_tail = 0.0;
    bool hypothesis_ok = false;

    bool ok() const { return is_common_fixed && hypothesis_ok; }
};

LimitReport verify_limit_fixed(const MetricSpace& space, const MultiMap& s,
                               const MultiMap& t, const AlphaOracle& alpha,
                               const IterationTrace& trace, double tol);

// Gap recurrence transfer: gaps[i] <= gamma * gaps[i-1] + 2^-i for all
// i >= 1. Exact comparisons; requires gamma in [0,1).
bool check_recurrence(std::span<const double> gaps, double gamma);

enum class RateRegime { TwoGammaAboveOne, TwoGammaBelowOne, TwoGammaEqualsOne };

struct RateBound {
    double gamma = 0.0;
    RateRegime regime = RateRegime::TwoGammaBelowOne;
    double value = 0.0;
};

// A priori bound on d(x_n, x_{n+m}) for any gap sequence obeying the
// recurrence above, normalized so max(d(x0,x1), 1) = 1:
//   2*gamma > 1 : 4*gamma^(n+1) / ((2*gamma-1)(1-gamma))      (m-free)
//   2*gamma < 1 : 1 / ((1-gamma)(1-2*gamma) * 2^(n-1))        (m-free)
//   2*gamma = 1 : (1/(1-gamma)) * (sum_{j=0}^{n} gamma^(n-j) 2^-j
//                                  + sum_{k=n+1}^{n+m-1} 2^-k)
// Requires gamma in [0,1), n >= 1, m >= 1.
double cauchy_bound(double gamma, int n, int m);
RateBound rate_bound(double gamma, int n, int m);

// CSV with mandatory header step,point,gap,epsilon,alpha,residual_S,residual_T;
// one row per visited point, empty cells where a column is undefined
// (last point has no gap/epsilon/alpha; step 0 has no alpha).
void write_trace_csv(std::ostream& out, const MetricSpace& space, const IterationTrace& trace);

} // namespace mvfp
