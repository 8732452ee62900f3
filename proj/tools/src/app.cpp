#include "bistat_cli/app.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <bistat/errors.hpp>

namespace bistat::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double to_number(const std::string& text, const std::string& flag) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InvalidArgument(flag + ": cannot parse number '" + text + "'");
  return v;
}

void parse_rgrid(const std::string& spec, RadialArgs& args) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw InvalidArgument("--rgrid expects lo:hi:n, got '" + spec + "'");
  args.r_lo = to_number(parts[0], "--rgrid");
  args.r_hi = to_number(parts[1], "--rgrid");
  const double n = to_number(parts[2], "--rgrid");
  if (n != std::floor(n) || n < 2 || n > 1e7) throw InvalidArgument("--rgrid: n must be an integer in [2, 1e7]");
  args.n = static_cast<int>(n);
}

void parse_window(const std::string& spec, RadialArgs& args) {
  const auto parts = split(spec, ':');
  if (parts.size() != 2) throw InvalidArgument("--window expects lo:hi, got '" + spec + "'");
  args.window = FitWindow{to_number(parts[0], "--window"), to_number(parts[1], "--window")};
}

void write_report(const CommandOutcome& outcome, const std::string& schema_name, const CommonOptions& common) {
  const auto problems = validate(outcome.report, schema(schema_name));
  if (!problems.empty()) throw std::logic_error("report violates " + schema_name + ": " + problems.front());
  std::filesystem::create_directories(common.out_dir);
  std::ofstream out(common.out_dir / "report.json", std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + (common.out_dir / "report.json").string());
  out << outcome.report.dump(2) << '\n';
}

void print_check(const json& r, std::ostream& out) {
  const json& v = r["verdict"];
  out << "verdict: " << v["level"].get<std::string>() << " (" << v["rule"].get<std::string>() << ")\n";
  out << "  lhs = " << v["lhs"].dump() << "  rhs = " << v["rhs"].dump() << "  margin = " << v["margin"].dump() << '\n';
  if (!r["per_segment"].empty()) {
    out << "  j   l   level                 lhs          rhs          margin\n";
    for (const auto& s : r["per_segment"]) {
      out << "  " << std::setw(3) << std::left << s["j"].get<int>() << ' ' << std::setw(3) << s["l"].get<int>() << ' ' << std::setw(21)
          << s["level"].get<std::string>() << ' ' << std::setw(12) << s["lhs"].get<double>() << ' ' << std::setw(12)
          << s["rhs"].get<double>() << ' ' << s["margin"].dump() << '\n';
    }
  }
}

void print_summary(const std::string& command, const json& r, std::ostream& out) {
  if (command == "check") {
    print_check(r, out);
  } else if (command == "constants") {
    out << "omega = " << r["omega"] << "  cbar = " << r["cbar"] << "  A = " << r["A"] << "  ctilde/omega = " << r["ctilde_over_omega"]
        << '\n';
    for (const auto& o : r["orders"]) out << "m = " << o["m"] << "  K = " << o["K"] << "  K' = " << o["K_prime"] << '\n';
  } else if (command == "radial") {
    out << "u-exponent = " << r["fit"]["u"]["exponent"] << "  du-exponent = " << r["fit"]["du"]["exponent"] << '\n';
    if (!r["flags"].empty()) out << "flags: " << r["flags"].dump() << '\n';
  } else {
    out << "converged = " << r["converged"] << "  energy = " << r["energy"] << "  grad_norm = " << r["grad_norm"] << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Born-Infeld point-charge toolkit: constants, certificates, radial profiles, grid solves", "bistat"};
  app.require_subcommand(1);
  CommonOptions common;
  std::string out_dir = ".";
  double tol = 0.0;
  std::uint64_t seed = 0;
  int max_subdivisions = 0;
  app.add_option("--out", out_dir, "Directory for report.json and CSV output");
  auto* tol_opt = app.add_option("--tol", tol, "Quadrature tolerance (constants, radial) or solver tolerance (solve)");
  auto* subdiv_opt = app.add_option("--max-subdivisions", max_subdivisions, "Bisections allowed per quadrature range");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for the perturbed initial guess of solve");
  app.add_flag("--override-guarantee", common.override_guarantee, "Report asymptotic constants outside the proven range");

  ConstantsArgs constants_args;
  auto* constants = app.add_subcommand("constants", "Sphere measure, best constants and asymptotic constants");
  constants->add_option("--dim", constants_args.dim, "Dimension N")->required();
  constants->add_option("--m", constants_args.orders, "Approximation orders")->delimiter(',');
  constants->add_option("--a", constants_args.strength, "Charge strength for gamma and K");
  constants->fallthrough();

  std::string check_path;
  auto* check = app.add_subcommand("check", "Solvability certificates for a charge configuration");
  check->add_option("config", check_path, "JSON run configuration")->required();
  check->fallthrough();

  RadialArgs radial_args;
  std::string rgrid_spec;
  std::string window_spec;
  auto* radial = app.add_subcommand("radial", "Single-charge radial profile and singularity fit");
  radial->add_option("--a", radial_args.a, "Charge strength");
  radial->add_option("--dim", radial_args.dim, "Dimension N");
  radial->add_option("--m", radial_args.m, "Approximation order");
  radial->add_flag("--exact", radial_args.exact, "Exact Born-Infeld profile instead of the approximant");
  radial->add_option("--rgrid", rgrid_spec, "Log-spaced radii lo:hi:n");
  radial->add_option("--window", window_spec, "Fit window lo:hi");
  radial->fallthrough();

  std::string solve_path;
  auto* solve = app.add_subcommand("solve", "Grid minimization of the order-m energy");
  solve->add_option("config", solve_path, "JSON run configuration")->required();
  bool box_study = false;
  solve->add_flag("--box-study", box_study, "Re-solve on a doubled box and report the inner-node change");
  solve->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  common.out_dir = out_dir;
  if (*tol_opt) common.tol = tol;
  if (*seed_opt) common.seed = seed;
  if (*subdiv_opt) common.max_subdivisions = max_subdivisions;

  std::string command;
  try {
    CommandOutcome outcome;
    if (*constants) {
      command = "constants";
      outcome = cmd_constants(constants_args, common);
    } else if (*check) {
      command = "check";
      outcome = cmd_check(load_run_config(check_path), common);
    } else if (*radial) {
      command = "radial";
      if (!rgrid_spec.empty()) parse_rgrid(rgrid_spec, radial_args);
      if (!window_spec.empty()) parse_window(window_spec, radial_args);
      outcome = cmd_radial(radial_args, common);
    } else {
      command = "solve";
      outcome = cmd_solve(load_run_config(solve_path), common, box_study);
    }
    write_report(outcome, command + "_report", common);
    print_summary(command, outcome.report, out);
    if (outcome.exit_code == kNonConvergence) err << "solver did not converge: grad_norm = " << outcome.report["grad_norm"] << '\n';
    return outcome.exit_code;
  } catch (const ConfigError& e) {
    for (const auto& d : e.diagnostics()) err << "error: " << d << '\n';
    return kInvalidInput;
  } catch (const AccuracyFailure& e) {
    err << "accuracy failure: " << e.what() << " (estimate " << e.estimate() << ", error bound " << e.error_bound() << ")\n";
    return kAccuracyFailure;
  } catch (const GuaranteeOutOfRange& e) {
    err << "error: " << e.what() << " (pass --override-guarantee to compute anyway)\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace bistat::cli
