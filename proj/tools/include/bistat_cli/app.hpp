#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <bistat/radial.hpp>

#include "bistat_cli/config.hpp"
#include "bistat_cli/schema.hpp"

namespace bistat::cli {

/// Process exit codes, one per outcome category.
enum ExitCode : int {
  kSuccess = 0,          ///< command succeeded, or a certificate applies
  kInconclusive = 1,     ///< check: no implemented sufficient condition applies
  kInvalidInput = 2,     ///< bad flags, malformed config, violated precondition
  kAccuracyFailure = 3,  ///< quadrature could not meet its tolerance
  kNonConvergence = 4,   ///< grid solver stopped above its tolerance
};

struct CommonOptions {
  std::filesystem::path out_dir = ".";
  std::optional<double> tol;
  std::optional<int> max_subdivisions;
  std::optional<std::uint64_t> seed;
  bool override_guarantee = false;
};

struct ConstantsArgs {
  int dim = 3;
  std::vector<int> orders;
  double strength = 1.0;
};

struct RadialArgs {
  double a = 1.0;
  int dim = 3;
  int m = 4;
  bool exact = false;
  double r_lo = 1e-7;
  double r_hi = 1e3;
  int n = 2001;
  FitWindow window;
};

struct CommandOutcome {
  int exit_code = kSuccess;
  json report;
};

/// Amplitude of the seeded interior perturbation applied to the initial guess.
inline constexpr double kSeedPerturbation = 1e-2;

CommandOutcome cmd_constants(const ConstantsArgs& args, const CommonOptions& common);
CommandOutcome cmd_check(const RunConfig& config, const CommonOptions& common);
/// Writes profile.csv (r,u,du) into common.out_dir.
CommandOutcome cmd_radial(const RadialArgs& args, const CommonOptions& common);
/// Writes field.csv (x,y,z,u) into common.out_dir. With box_study set, the
/// converged field is re-solved on a box padded by 2x per axis and the
/// inner-node discrepancy is reported under "box_study".
CommandOutcome cmd_solve(const RunConfig& config, const CommonOptions& common, bool box_study = false);

/// Full command-line entry point: parses argv, runs the subcommand, writes
/// report.json into --out and maps every failure to an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "%.17g" formatting used for every CSV value.
std::string format_double(double x);

}  // namespace bistat::cli
