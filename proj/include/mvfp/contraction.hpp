#pragma once

#include "mvfp/metric.hpp"
#include "mvfp/multimap.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mvfp {

// Raised when a declared certificate is violated or its premises are out
// of range (coefficient not in [0,1), gauge above the identity, negative
// gap, chain inequality broken along a trace, ...).
class CertificateError : public std::runtime_error {
public:
    explicit CertificateError(const std::string& what,
                              std::optional<std::pair<Point, Point>> pair = std::nullopt)
        : std::runtime_error(what), pair_(pair) {}

    // Pair of points at which the violation was detected, when pointwise.
    const std::optional<std::pair<Point, Point>>& pair() const { return pair_; }

private:
    std::optional<std::pair<Point, Point>> pair_;
};

enum class CertificateKind { ConstantAlpha, AlphaDuality, PhiDuality, WeaklyContractive };

std::string to_string(CertificateKind kind);

// Pointwise coefficient oracle alpha : X x X -> [0,1). Every evaluation is
// range-checked; a value outside [0,1) is a certificate violation, not a
// numeric failure.
class AlphaOracle {
public:
    AlphaOracle(std::function<double(Point, Point)> fn, std::string name = "custom");
    static AlphaOracle constant(double value);

    double operator()(Point x, Point y) const;
    const std::string& name() const { return name_; }

private:
    std::function<double(Point, Point)> fn_;
    std::string name_;
};

// Univariate comparison gauge phi : [0,inf) -> [0,inf) with phi(0) = 0 and
// phi(t) < t for t > 0. The inequality is enforced where the gauge is
// actually used (checkers probe it up front); evaluation itself only
// rejects negative arguments and negative values.
class Gauge {
public:
    Gauge(std::function<double(double)> fn, std::string name = "custom");
    static Gauge linear(double c);  // c*t, requires c in [0,1)
    static Gauge rational();        // t/(1+t)
    static Gauge zero();

    double operator()(double t) const;
    const std::string& name() const { return name_; }

private:
    std::function<double(double)> fn_;
    std::string name_;
};

// Bivariate gap oracle for the weakly contractive certificate:
// H(Tx,Ty) <= d(x,y) - gap(x,y). Values must be nonnegative; compact
// positivity (inf over every distance band is positive) is what the
// checker verifies on the finite space.
class GapOracle {
public:
    GapOracle(std::function<double(Point, Point)> fn, std::string name = "custom");
    static GapOracle half_distance(const MetricSpace& space);
    static GapOracle scaled_distance(const MetricSpace& space, double c); // c*d, c in (0,1)
    static GapOracle constant(double c);                                  // c > 0 off-diagonal, 0 on it

    double operator()(Point x, Point y) const;
    const std::string& name() const { return name_; }

private:
    std::function<double(Point, Point)> fn_;
    std::string name_;
};

// Which ordered pairs a checker evaluates.
struct PairSelection {
    static PairSelection all();
    static PairSelection sample(long long count, std::uint64_t seed);

    bool exhaustive = true;
    long long count = 0;
    std::uint64_t seed = 0;
};

struct CertificateReport {
    CertificateKind kind = CertificateKind::AlphaDuality;
    long long pairs_checked = 0;
    bool passed = true;
    // Pair with the largest margin = lhs - rhs; a positive margin is a
    // violation. passed <=> worst_margin <= 0, provided premise_ok.
    std::optional<std::pair<Point, Point>> worst_pair;
    double worst_margin = 0.0;
    // False when a structural premise failed (e.g. the gap oracle is not
    // compactly positive); note explains.
    bool premise_ok = true;
    std::string note;
};

// M(x,y) = max{ d(x,y), d(x,Sx), d(y,Ty), (d(x,Ty)+d(y,Sx))/2 }.
double m_functional(const MetricSpace& space, const MultiMap& s, const MultiMap& t,
                    Point x, Point y);

// Single-map variant: N(x,y) = M(x,y) with S := T.
double n_functional(const MetricSpace& space, const MultiMap& t, Point x, Point y);

// H(Sx,Ty) <= alpha(x,y) * M(x,y) over the selected ordered pairs.
CertificateReport check_alpha_duality(const MetricSpace& space, const MultiMap& s,
                                      const MultiMap& t, const AlphaOracle& alpha,
                                      const PairSelection& pairs);

// H(Sx,Ty) <= phi(M(x,y)). The gauge is probed up front (phi(0) = 0 and
// phi(t) < t over realized distances) before any pair is checked.
CertificateReport check_phi_duality(const MetricSpace& space, const MultiMap& s,
                                    const MultiMap& t, const Gauge& phi,
                                    const PairSelection& pairs);

// H(Tx,Ty) <= d(x,y) - gap(x,y), plus compact positivity of the gap over
// every realized distance band.
CertificateReport check_weakly_contractive(const MetricSpace& space, const MultiMap& t,
                                           const GapOracle& gap, const PairSelection& pairs);

// inf{ gap(x,y) : a <= d(x,y) <= b } over ordered pairs; +inf when the
// band contains no pair. Requires 0 < a <= b.
double lambda_band(const MetricSpace& space, const GapOracle& gap, double a, double b);

// alpha(x,y) = 1 - gap(x,y)/d(x,y) for d > 0, else 0. Maps a compactly
// positive gap into a coefficient oracle on the same space.
AlphaOracle alpha_from_compact_gap(const GapOracle& gap, const MetricSpace& space);

// alpha(x,y) = phi(M(x,y))/M(x,y) for M > 0, else 0.
AlphaOracle alpha_from_gauge(const Gauge& phi, const MetricSpace& space,
                             const MultiMap& s, const MultiMap& t);

// Sampled, falsification-only checks of the two asymptotic gauge
// conditions: limsup_{t->0} phi(t)/t < 1 and liminf_{t->inf} (t - phi(t)) > 0.
// A pass says "not falsified on this grid", never a proof.
struct GaugeConditionReport {
    bool zero_at_zero = false;
    bool below_identity = false;   // phi(t) < t at every sampled t > 0
    double max_ratio = 0.0;        // max phi(t)/t over the grid
    double ratio_near_zero = 0.0;  // max phi(t)/t over t < 1e-3
    double min_slack_large_t = 0.0; // min t - phi(t) over t > 1e3
    bool small_t_ok = false;       // ratio_near_zero < 1
    bool large_t_ok = false;       // min_slack_large_t > 0
    std::string note;

    bool all_ok() const { return zero_at_zero && below_identity && small_t_ok && large_t_ok; }
};

// 200 log-spaced samples covering [1e-9, 1e6].
std::vector<double> default_gauge_grid();

GaugeConditionReport check_gauge_conditions(const Gauge& phi, std::span<const double> t_grid);

// A declared contraction certificate: which inequality family, with which
// oracle. Exactly the member matching `kind` is used.
struct ContractionSpec {
    CertificateKind kind = CertificateKind::ConstantAlpha;
    std::optional<AlphaOracle> alpha; // ConstantAlpha / AlphaDuality
    std::optional<Gauge> phi;         // PhiDuality
    std::optional<GapOracle> gap;     // WeaklyContractive
    bool alpha_usc = false;           // declared upper semicontinuity flags;
    bool phi_usc = false;             // informational on finite spaces
};

// Coefficient oracle the solver iterates with, derived from the declared
// certificate (stored alpha, or the gap/gauge adapters above).
AlphaOracle effective_alpha(const ContractionSpec& spec, const MetricSpace& space,
                            const MultiMap& s, const MultiMap& t);

// Dispatches to the checker matching spec.kind.
CertificateReport check_certificate(const MetricSpace& space, const MultiMap& s,
                                    const MultiMap& t, const ContractionSpec& spec,
                                    const PairSelection& pairs);

} // namespace mvfp
