#include "mvfp/commands.hpp"

#include "mvfp/endpoint.hpp"
#include "mvfp/oracle.hpp"
#include "mvfp/solver.hpp"
#include "mvfp/text.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace mvfp {

namespace {

std::string pair_text(const MetricSpace& space, const std::pair<Point, Point>& pair) {
    return "(" + format_number(space.label(pair.first)) + ", " +
           format_number(space.label(pair.second)) + ")";
}

ContractionSpec spec_of(const ProblemFile& problem) {
    return make_contraction_spec(problem.contraction, problem.space, problem.s, problem.t);
}

} // namespace

std::optional<ProblemFile> load_problem_file(const std::string& path, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "cannot open " << path << "\n";
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    ParseResult result = parse_problem(buffer.str());
    if (!result.ok()) {
        for (const ParseIssue& issue : result.issues) {
            err << path << ":";
            if (issue.line > 0) err << issue.line << ":";
            err << " " << issue.message << "\n";
        }
        return std::nullopt;
    }
    return std::move(result.problem);
}

int cmd_verify(const ProblemFile& problem, const VerifyOptions& options,
               std::ostream& out, std::ostream& err) {
    try {
        const ContractionSpec spec = spec_of(problem);
        const PairSelection pairs = options.sample_pairs
                                        ? PairSelection::sample(*options.sample_pairs, 12345)
                                        : PairSelection::all();
        const CertificateReport report =
            check_certificate(problem.space, problem.s, problem.t, spec, pairs);

        out << "certificate: " << to_string(report.kind) << "\n";
        out << "pairs checked: " << report.pairs_checked
            << (options.sample_pairs ? " (sampled)" : " (exhaustive)") << "\n";
        if (!report.note.empty()) out << "note: " << report.note << "\n";
        if (report.passed) {
            out << "result: PASS (worst margin "
                << (report.worst_pair ? format_number(report.worst_margin) : "n/a") << ")\n";
            return kExitSuccess;
        }
        out << "result: FAIL";
        if (report.worst_pair)
            out << " at pair " << pair_text(problem.space, *report.worst_pair) << " (margin "
                << format_number(report.worst_margin) << ")";
        out << "\n";
        return kExitNegative;
    } catch (const CertificateError& e) {
        err << "certificate error: " << e.what() << "\n";
        return kExitCertificate;
    }
}

int cmd_solve(const ProblemFile& problem, const SolveOptions& options,
              std::ostream& out, std::ostream& err) {
    const auto x0 = problem.space.point_with_label(options.x0);
    if (!x0) {
        err << "start label " << format_number(options.x0) << " is not a point of the space\n";
        return kExitUsage;
    }
    SolverConfig config;
    if (options.mode == "argmin") {
        config.selection = SelectionMode::Argmin;
    } else if (options.mode == "slack") {
        config.selection = SelectionMode::EpsilonSlack;
    } else {
        err << "mode must be argmin or slack\n";
        return kExitUsage;
    }
    if (options.max_iterations < 0 || options.tolerance < 0.0) {
        err << "max iterations and tolerance must be nonnegative\n";
        return kExitUsage;
    }
    config.max_iterations = options.max_iterations;
    config.residual_tolerance = options.tolerance;
    config.seed = options.seed;

    try {
        const ContractionSpec spec = spec_of(problem);
        const AlphaOracle alpha = effective_alpha(spec, problem.space, problem.s, problem.t);
        const IterationTrace trace =
            iterate_duality(problem.space, problem.s, problem.t, alpha, *x0, config);

        if (options.trace_path) {
            std::ofstream csv(*options.trace_path);
            if (!csv) {
                err << "cannot write trace to " << *options.trace_path << "\n";
                return kExitUsage;
            }
            write_trace_csv(csv, problem.space, trace);
        }

        const LimitReport limit = verify_limit_fixed(problem.space, problem.s, problem.t, alpha,
                                                     trace, config.residual_tolerance);
        out << "steps: " << trace.steps() << "\n";
        out << "final point: " << format_number(problem.space.label(trace.final_point()))
            << " (residuals " << format_number(limit.residual_s) << ", "
            << format_number(limit.residual_t) << ")\n";
        out << "limit check: " << (limit.is_common_fixed ? "common fixed point" : "not fixed")
            << ", max tail coefficient " << format_number(limit.max_alpha_even_tail)
            << (limit.hypothesis_ok ? " (< 1)" : " (NOT < 1)") << "\n";

        switch (trace.terminated) {
            case Termination::Converged:
                out << "result: converged\n";
                return kExitSuccess;
            case Termination::MaxIterations:
                out << "result: max iterations reached\n";
                return kExitMaxIterations;
            case Termination::Stalled:
                out << "result: stalled (" << trace.note << ")\n";
                return kExitStalled;
        }
        return kExitStalled;
    } catch (const CertificateError& e) {
        err << "certificate error: " << e.what() << "\n";
        return kExitCertificate;
    }
}

int cmd_endpoint(const ProblemFile& problem, const EndpointOptions& options,
                 std::ostream& out, std::ostream& err) {
    // Exact comparisons on hand-entered matrices; derived entries carry
    // float round-off, so they get a small default tolerance.
    const double tol = options.tolerance
                           ? *options.tolerance
                           : (problem.space.derived_entries() ? 1e-9 : 0.0);
    if (tol < 0.0) {
        err << "tolerance must be nonnegative\n";
        return kExitUsage;
    }
    try {
        const ContractionSpec spec = spec_of(problem);
        const EndpointResult result =
            find_common_endpoint(problem.space, problem.s, problem.t, spec, tol);

        out << "certificate: " << to_string(result.certificate_kind) << "\n";
        out << "infimum combined gap: " << format_number(result.final_gap) << "\n";
        if (!std::isnan(result.tail_alpha))
            out << "tail coefficient: " << format_number(result.tail_alpha)
                << (result.tail_condition_ok ? " (< 1)" : " (NOT < 1)") << "\n";
        if (result.endpoint) {
            out << "result: endpoint " << format_number(problem.space.label(*result.endpoint))
                << (result.unique ? " (unique)" : " (NOT unique)") << "\n";
            return kExitSuccess;
        }
        out << "result: no endpoint (approximate endpoint property fails: infimum "
            << format_number(result.final_gap) << " > tolerance " << format_number(tol) << ")\n";
        return kExitNegative;
    } catch (const CertificateError& e) {
        err << "certificate error: " << e.what() << "\n";
        return kExitCertificate;
    }
}

int cmd_bounds(double gamma, int n, int m, std::ostream& out, std::ostream& err) {
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        err << "gamma must lie in [0, 1)\n";
        return kExitUsage;
    }
    if (n < 1 || m < 1) {
        err << "n and m must be at least 1\n";
        return kExitUsage;
    }
    const RateBound bound = rate_bound(gamma, n, m);
    out << "gamma: " << format_number(bound.gamma) << "\n";
    switch (bound.regime) {
        case RateRegime::TwoGammaAboveOne:
            out << "regime: 2*gamma > 1 (geometric tail, independent of m)\n";
            break;
        case RateRegime::TwoGammaBelowOne:
            out << "regime: 2*gamma < 1 (halving tail dominates, independent of m)\n";
            break;
        case RateRegime::TwoGammaEqualsOne:
            out << "regime: 2*gamma = 1 (finite sum over the span m = " << m << ")\n";
            break;
    }
    out << "bound on d(x_" << n << ", x_" << n + m << "): " << format_number(bound.value) << "\n";
    return kExitSuccess;
}

} // namespace mvfp
