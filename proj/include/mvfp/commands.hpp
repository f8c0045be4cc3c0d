#pragma once

#include "mvfp/contraction.hpp"
#include "mvfp/problem.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace mvfp {

// Process exit codes shared by every subcommand.
//   0  success / positive result
//   1  negative result (certificate fails, no endpoint, ...)
//   2  certificate or declaration error (violated premise, bad factor)
//   3  iteration stopped at max-iterations
//   4  iteration stalled
//   64 usage error
//   65 problem file parse/validation error
enum ExitCode : int {
    kExitSuccess = 0,
    kExitNegative = 1,
    kExitCertificate = 2,
    kExitMaxIterations = 3,
    kExitStalled = 4,
    kExitUsage = 64,
    kExitParse = 65,
};

struct VerifyOptions {
    // nullopt = exhaustive; otherwise sample this many ordered pairs.
    std::optional<long long> sample_pairs;
};

struct SolveOptions {
    double x0 = 0.0;             // label of the start point
    std::string mode = "argmin"; // or "slack"
    std::uint64_t seed = 0;
    int max_iterations = 1000;
    double tolerance = 1e-9;
    std::optional<std::string> trace_path; // write the CSV trace here
};

struct EndpointOptions {
    // Default tolerance: 0 on explicit-matrix spaces, 1e-9 on derived ones.
    std::optional<double> tolerance;
};

// Each command loads/validates its inputs, prints a human-readable result
// to `out` (diagnostics to `err`) and returns an exit code from the table
// above. The CLI wrapper passes std::cout/std::cerr.
int cmd_verify(const ProblemFile& problem, const VerifyOptions& options,
               std::ostream& out, std::ostream& err);
int cmd_solve(const ProblemFile& problem, const SolveOptions& options,
              std::ostream& out, std::ostream& err);
int cmd_endpoint(const ProblemFile& problem, const EndpointOptions& options,
                 std::ostream& out, std::ostream& err);
int cmd_bounds(double gamma, int n, int m, std::ostream& out, std::ostream& err);

// Reads and parses a problem file; reports issues to `err` and returns
// nullopt on failure (caller exits kExitParse).
std::optional<ProblemFile> load_problem_file(const std::string& path, std::ostream& err);

} // namespace mvfp
