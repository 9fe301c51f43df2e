#pragma once

// Command-line front end: configuration, solve, verify, emit.

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "frdt/problems.hpp"
#include "frdt/series.hpp"

namespace frdt::app {

enum class ExitCode : int {
    Success = 0,
    VerificationFailed = 1,
    Usage = 2,
    Runtime = 3,
};

enum class OutputFormat { Csv, Json, Svg };

struct RunConfig {
    Problem problem = Problem::LseCosh;
    double alpha = 1.0;
    double sigma = 0.0;
    double a = 1.0;
    double b = 1.0;
    double n = 1.0;
    double m = 1.0;
    int terms = 10;
    Grid x_grid{-1.0, 1.0, 2};
    Grid t_grid{0.0, 1.0, 2};
    std::set<OutputFormat> outputs{OutputFormat::Csv};
    bool verify = false;
    std::string output_path = "solution";
    // Test hook: perturb U_k after solving so verification must fail.
    std::optional<int> corrupt_coeff;

    ProblemSpec spec() const;
};

// Thresholds applied by --verify.
inline constexpr double kLinearOracleTol = 1e-10;
inline constexpr double kNonlinearOracleTol = 1e-8;
inline constexpr double kResidualTol = 1e-9;

// Problem defaults including their reference sampling grids.
RunConfig default_config(Problem p);

// Throws UsageError naming the offending field.
void validate(const RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);

// Overlays the keys present in j onto base. Unknown keys and wrongly typed
// values throw UsageError.
RunConfig apply_json(RunConfig base, const nlohmann::json& j);

// Builds a validated config from argv (excluding argv[0]). Returns nullopt
// when help was requested (help text goes to out).
std::optional<RunConfig> parse_command_line(const std::vector<std::string>& args, std::ostream& out);

// The residual gate applies to the scale-relative residual (see Residuals);
// the absolute maximum is reported alongside it.
struct VerificationReport {
    double max_residual = 0.0;
    double max_relative_residual = 0.0;
    std::optional<double> max_oracle_error;
    double residual_tol = kResidualTol;
    std::optional<double> oracle_tol;
    bool passed = false;

    nlohmann::json to_json() const;
};

VerificationReport verify(const ProblemSpec& spec, const Solution& sol, const Grid& x_grid,
                          const Grid& t_grid);

// Solves, writes the requested artifacts and, when enabled, the verification
// report. Errors propagate as exceptions.
ExitCode run(const RunConfig& cfg, std::ostream& out);

// argv-level entry point: maps exceptions onto exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frdt::app
