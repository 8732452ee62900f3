#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include <bistat/certificates.hpp>
#include <bistat/constants.hpp>
#include <bistat/errors.hpp>
#include <bistat/field.hpp>
#include <bistat/profiles.hpp>
#include <bistat/radial.hpp>

#include "bistat_cli/app.hpp"
#include "bistat_cli/version.hpp"

namespace bistat::cli {
namespace {

// JSON has no infinity; the +inf sentinel is written as null.
json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json verdict_json(const Verdict& v) {
  return json{{"level", to_string(v.level)}, {"rule", v.rule}, {"lhs", v.lhs}, {"rhs", finite_or_null(v.rhs)},
              {"margin", finite_or_null(v.margin)}};
}

json segment_json(const SegmentVerdict& s) {
  return json{{"j", s.j}, {"l", s.l}, {"level", to_string(s.level)}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"margin", finite_or_null(s.margin)}};
}

json charges_json(const ChargeConfig& config) {
  json out = json::array();
  for (const auto& c : config.charges()) out.push_back(json{{"pos", c.position}, {"a", c.strength}});
  return out;
}

std::ofstream open_output(const std::filesystem::path& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + (dir / name).string());
  return out;
}

QuadratureOptions quadrature_options(const CommonOptions& common) {
  QuadratureOptions q;
  if (common.tol) q.abs_tol = *common.tol;
  if (!(q.abs_tol > 0.0)) throw InvalidArgument("--tol must be positive");
  if (common.max_subdivisions) {
    if (*common.max_subdivisions < 0) throw InvalidArgument("--max-subdivisions must be non-negative");
    q.max_subdivisions = *common.max_subdivisions;
  }
  return q;
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CommandOutcome cmd_constants(const ConstantsArgs& args, const CommonOptions& common) {
  if (args.dim < 3) throw InvalidArgument("--dim must be at least 3, got " + std::to_string(args.dim));
  QuadratureOptions q;
  q.abs_tol = 1e-12;
  if (common.tol || common.max_subdivisions) q = quadrature_options(common);
  const double omega = sphere_measure(args.dim);
  const double ctilde = refined_constant_ctilde(args.dim, q);
  json report{{"command", "constants"},
              {"version", kVersion},
              {"dim", args.dim},
              {"strength", args.strength},
              {"omega", omega},
              {"cbar", best_constant_cbar(args.dim)},
              {"A", shape_constant_A(args.dim, q)},
              {"ctilde", ctilde},
              {"ctilde_over_omega", ctilde / omega},
              {"orders", json::array()}};
  const auto policy = common.override_guarantee ? GuaranteePolicy::Override : GuaranteePolicy::Enforce;
  for (int m : args.orders) {
    const AsymptoticsSpec s = asymptotics_spec(m, args.dim, args.strength, policy);
    report["orders"].push_back(json{{"m", m},
                                    {"alpha_m", taylor_coefficients(m).alpha(m)},
                                    {"kappa", s.kappa},
                                    {"gamma", s.gamma},
                                    {"K", s.K},
                                    {"K_prime", s.K_prime},
                                    {"u_exponent", s.u_exponent},
                                    {"grad_exponent", s.grad_exponent},
                                    {"holder", s.holder},
                                    {"guaranteed", s.guaranteed}});
  }
  return {kSuccess, std::move(report)};
}

CommandOutcome cmd_check(const RunConfig& config, const CommonOptions& /*common*/) {
  const ChargeConfig& charges = config.charges;
  const Verdict summary = summarize(charges);
  json two_charge = nullptr;
  try {
    two_charge = verdict_json(check_two_charge(charges));
  } catch (const NotApplicable&) {
  }
  json segments = json::array();
  for (const auto& s : summary.per_segment) segments.push_back(segment_json(s));
  json report{{"command", "check"},
              {"version", kVersion},
              {"dim", charges.dim()},
              {"charges", charges_json(charges)},
              {"verdict", verdict_json(summary)},
              {"rules", json{{"global", verdict_json(check_global(charges))},
                             {"refined", verdict_json(check_refined(charges))},
                             {"two_charge", two_charge}}},
              {"per_segment", segments}};
  return {summary.level == VerdictLevel::Inconclusive ? kInconclusive : kSuccess, std::move(report)};
}

CommandOutcome cmd_radial(const RadialArgs& args, const CommonOptions& common) {
  if (!(args.r_lo > 0.0) || !(args.r_hi > args.r_lo) || args.n < 2) {
    throw InvalidArgument("--rgrid needs 0 < lo < hi and n >= 2");
  }
  const QuadratureOptions q = quadrature_options(common);
  const std::vector<double> rgrid = log_spaced(args.r_lo, args.r_hi, static_cast<std::size_t>(args.n));
  const RadialProfile profile = args.exact ? exact_radial_profile(args.a, args.dim, rgrid, q)
                                           : approx_radial_profile(args.a, args.m, args.dim, rgrid, q);
  const SingularityFit fit = fit_singularity(profile, args.window);

  const bool guaranteed = !args.exact && asymptotics_guaranteed(args.m, args.dim);
  json flags = json::array();
  if (!args.exact && !guaranteed) flags.push_back("unguaranteed");
  if (!fit.centered) flags.push_back("uncentered");

  json predicted = nullptr;
  if (!args.exact && 2 * args.m > args.dim && (guaranteed || common.override_guarantee)) {
    const AsymptoticsSpec s = asymptotics_spec(args.m, args.dim, args.a, GuaranteePolicy::Override);
    predicted = json{{"u_exponent", s.u_exponent}, {"grad_exponent", s.grad_exponent}, {"K", s.K}, {"K_prime", s.K_prime},
                     {"kappa", s.kappa}, {"gamma", s.gamma}, {"holder", s.holder}};
  }

  const auto fit_json = [](const FitResult& f) {
    return json{{"exponent", f.exponent}, {"coefficient", f.coefficient}, {"sign", f.sign}, {"residual", f.residual}, {"samples", f.samples}};
  };
  json report{{"command", "radial"},
              {"version", kVersion},
              {"dim", args.dim},
              {"strength", args.a},
              {"kind", args.exact ? "exact" : "approximant"},
              {"order", args.exact ? 0 : args.m},
              {"rgrid", json{{"lo", args.r_lo}, {"hi", args.r_hi}, {"n", args.n}}},
              {"center_value", profile.center_value ? json(*profile.center_value) : json(nullptr)},
              {"guaranteed", guaranteed},
              {"flags", flags},
              {"fit", json{{"window", {args.window.r_min, args.window.r_max}},
                           {"u", fit_json(fit.u)},
                           {"du", fit_json(fit.du)},
                           {"centered", fit.centered}}},
              {"predicted", predicted},
              {"warnings", profile.warnings},
              {"profile_csv", "profile.csv"}};

  std::ofstream csv = open_output(common.out_dir, "profile.csv");
  csv << "r,u,du\n";
  for (const auto& s : profile.samples) csv << format_double(s.r) << ',' << format_double(s.u) << ',' << format_double(s.du) << '\n';
  return {kSuccess, std::move(report)};
}

CommandOutcome cmd_solve(const RunConfig& config, const CommonOptions& common, bool box_study) {
  if (!config.box) throw InvalidArgument("solve needs a \"box\" block in the configuration");
  SolverOptions options;
  options.tol = common.tol.value_or(config.solver_tol);
  options.max_iter = config.max_iter;
  const DiscreteProblem problem = assemble_problem(config.charges, config.box->box, config.box->h, config.order_m, config.boundary_rule);
  const std::optional<std::uint64_t> seed = common.seed ? common.seed : config.seed;
  const GridField field = seed ? minimize_energy(problem, perturbed_initial_guess(problem, *seed, kSeedPerturbation), options)
                               : minimize_energy(problem, options);

  const GridShape& shape = problem.shape;
  json charges = json::array();
  for (const GridCharge& q : problem.charges) {
    const auto& src = config.charges[q.source];
    charges.push_back(json{{"pos", src.position}, {"a", src.strength}, {"node", q.node}, {"snap_distance", q.snap_distance}});
  }
  json extremum = nullptr;
  json segments = nullptr;
  if (field.converged) {
    extremum = json::array();
    for (const auto& e : extremum_report(field)) {
      extremum.push_back(json{{"charge", e.charge}, {"a", e.strength}, {"observed", to_string(e.observed)},
                              {"expected", to_string(e.expected)}, {"margin", e.margin}, {"matches", e.matches}});
    }
    segments = json::array();
    for (const auto& s : segment_report(field)) {
      segments.push_back(json{{"j", s.j}, {"l", s.l}, {"distance", s.distance}, {"defect", s.defect}, {"light_ratio", s.light_ratio},
                              {"threshold", s.threshold}, {"near_light", s.near_light}, {"same_sign", s.same_sign}});
    }
  }
  const GradientSup sup = gradient_sup(field);
  json study = nullptr;
  if (box_study && field.converged) {
    const BoxStudy b = box_doubling_study(field, options);
    study = json{{"outer_nodes", b.outer.n}, {"max_difference", b.max_difference}, {"field_scale", b.field_scale}, {"converged", b.converged}};
  }
  const Box& box = config.box->box;
  json report{{"command", "solve"},
              {"version", kVersion},
              {"dim", 3},
              {"order_m", config.order_m},
              {"boundary_rule", to_string(config.boundary_rule)},
              {"box", json{{"lo", box.lo}, {"hi", box.hi}, {"h", config.box->h}}},
              {"nodes", shape.n},
              {"charges", charges},
              {"seed", seed ? json(*seed) : json(nullptr)},
              {"tolerance", options.tol},
              {"converged", field.converged},
              {"energy", field.energy},
              {"initial_energy", field.initial_energy},
              {"grad_norm", field.grad_norm},
              {"iterations", field.iterations},
              {"cg_iterations", field.cg_iterations},
              {"extremum", extremum},
              {"segments", segments},
              {"gradient_sup", json{{"value", sup.value}, {"distance", sup.distance}}},
              {"box_study", study},
              {"certificate", to_string(summarize(config.charges).level)},
              {"field_csv", "field.csv"}};

  std::ofstream csv = open_output(common.out_dir, "field.csv");
  csv << "x,y,z,u\n";
  for (std::size_t f = 0; f < shape.node_count(); ++f) {
    const auto x = shape.position(shape.unflat(f));
    csv << format_double(x[0]) << ',' << format_double(x[1]) << ',' << format_double(x[2]) << ',' << format_double(field.values[f]) << '\n';
  }
  return {field.converged ? kSuccess : kNonConvergence, std::move(report)};
}

}  // namespace bistat::cli
