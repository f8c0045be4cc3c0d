#include "mvfp/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

// --pairs accepts "all" or a positive sample count.
bool parse_pairs(const std::string& value, std::optional<long long>& out, std::string& error) {
    if (value == "all") {
        out = std::nullopt;
        return true;
    }
    try {
        std::size_t used = 0;
        const long long n = std::stoll(value, &used);
        if (used != value.size() || n < 0) throw std::invalid_argument("");
        out = n;
        return true;
    } catch (...) {
        error = "--pairs needs 'all' or a nonnegative count";
        return false;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Common fixed points and endpoints of finite multi-valued maps"};
    app.require_subcommand(1);

    std::string problem_path;
    std::string pairs_value = "all";
    auto* verify = app.add_subcommand("verify", "Check the declared contraction certificate");
    verify->add_option("problem", problem_path, "Problem file")->required();
    verify->add_option("--pairs", pairs_value, "all (default) or a sample count");

    mvfp::SolveOptions solve_options;
    auto* solve = app.add_subcommand("solve", "Iterate the alternating selection scheme");
    solve->add_option("problem", problem_path, "Problem file")->required();
    solve->add_option("--x0", solve_options.x0, "Start point label")->required();
    solve->add_option("--mode", solve_options.mode, "argmin (default) or slack");
    solve->add_option("--seed", solve_options.seed, "RNG seed for slack mode");
    solve->add_option("--max-iter", solve_options.max_iterations, "Iteration budget");
    solve->add_option("--tol", solve_options.tolerance, "Residual tolerance");
    std::string trace_path;
    solve->add_option("--trace", trace_path, "Write the iteration trace CSV here");

    mvfp::EndpointOptions endpoint_options;
    double endpoint_tol = -1.0;
    auto* endpoint = app.add_subcommand("endpoint", "Search for a common endpoint");
    endpoint->add_option("problem", problem_path, "Problem file")->required();
    endpoint->add_option("--tol", endpoint_tol,
                         "Gap tolerance (default: 0 on matrices, 1e-9 on grids)");

    double gamma = 0.0;
    int bound_n = 1;
    int bound_m = 1;
    auto* bounds = app.add_subcommand("bounds", "A priori Cauchy rate bound");
    bounds->add_option("--gamma", gamma, "Contraction factor in [0, 1)")->required();
    bounds->add_option("--n", bound_n, "Start index (>= 1)")->required();
    bounds->add_option("--m", bound_m, "Span (>= 1, matters when 2*gamma = 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return mvfp::kExitUsage;
    }

    if (bounds->parsed()) return mvfp::cmd_bounds(gamma, bound_n, bound_m, std::cout, std::cerr);

    const auto problem = mvfp::load_problem_file(problem_path, std::cerr);
    if (!problem) return mvfp::kExitParse;

    if (verify->parsed()) {
        mvfp::VerifyOptions options;
        std::string error;
        if (!parse_pairs(pairs_value, options.sample_pairs, error)) {
            std::cerr << error << "\n";
            return mvfp::kExitUsage;
        }
        return mvfp::cmd_verify(*problem, options, std::cout, std::cerr);
    }
    if (solve->parsed()) {
        if (!trace_path.empty()) solve_options.trace_path = trace_path;
        return mvfp::cmd_solve(*problem, solve_options, std::cout, std::cerr);
    }
    if (endpoint->parsed()) {
        if (endpoint_tol >= 0.0) endpoint_options.tolerance = endpoint_tol;
        return mvfp::cmd_endpoint(*problem, endpoint_options, std::cout, std::cerr);
    }
    return mvfp::kExitUsage;
}
