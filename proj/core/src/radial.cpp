#include "bistat/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "bistat/constants.hpp"
#include "bistat/errors.hpp"
#include "bistat/summation.hpp"

namespace bistat {
namespace {

constexpr int kNewtonIterations = 100;

void require_charge(double a) {
  if (a == 0.0 || !std::isfinite(a)) throw InvalidArgument("charge strength must be finite and nonzero");
}

void require_dim(int dim) {
  if (dim < 3) throw InvalidArgument("radial solver needs N >= 3, got " + std::to_string(dim));
}

double solve_flux(double target, const CoefficientTable& table) {
  if (target == 0.0) return 0.0;
  const int m = table.order();
  double lo = 0.0;
  double hi = std::min(target, std::pow(target / table.alpha(m), 1.0 / (2.0 * m - 1.0)));
  double t = hi;
  for (int it = 0; it < kNewtonIterations; ++it) {
    const double residual = table.flux(t) - target;
    if (residual == 0.0) return t;
    if (residual > 0.0) {
      hi = t;
    } else {
      lo = t;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
    double next = t - residual / table.flux_derivative(t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 2.0 * std::numeric_limits<double>::epsilon() * t) {
      t = next;
      break;
    }
    t = next;
  }
  // Newton stalls only on pathological brackets; finish by bisection.
  for (int it = 0; it < 200 && std::abs(table.flux(t) - target) > 1e-14 * std::max(1.0, target); ++it) {
    t = 0.5 * (lo + hi);
    if (table.flux(t) > target) {
      hi = t;
    } else {
      lo = t;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
  }
  return t;
}

}  // namespace

double flux_gradient_magnitude(double r, double a, const CoefficientTable& table, int dim) {
  require_charge(a);
  require_dim(dim);
  if (!(r > 0.0)) throw InvalidArgument("flux_gradient_magnitude needs r > 0");
  const double target = std::abs(a) / (sphere_measure(dim) * std::pow(r, dim - 1));
  return solve_flux(target, table);
}

double flux_gradient_magnitude(double r, double a, int m, int dim) {
  return flux_gradient_magnitude(r, a, taylor_coefficients(m), dim);
}

RadialProfile approx_radial_profile(double a, int m, int dim, std::span<const double> rgrid,
                                    const QuadratureOptions& options) {
  require_charge(a);
  require_dim(dim);
  require_radius_grid(rgrid);
  const CoefficientTable table = taylor_coefficients(m);
  const double flux_scale = std::abs(a) / sphere_measure(dim);
  const auto slope = [&table, flux_scale, dim](double s) {
    if (!(s > 0.0)) return 0.0;
    return solve_flux(flux_scale / std::pow(s, dim - 1), table);
  };

  QuadratureOptions segment_options = options;
  segment_options.abs_tol = options.abs_tol / static_cast<double>(rgrid.size() + 2);

  const std::size_t n = rgrid.size();
  RadialProfile profile;
  profile.dim = dim;
  profile.strength = a;
  profile.kind = ProfileKind::Approximant;
  profile.order = m;
  profile.samples.resize(n);

  CompensatedSum magnitude;
  magnitude += integrate_decaying(slope, rgrid[n - 1], segment_options).value;
  for (std::size_t i = n; i-- > 0;) {
    if (i + 1 < n) magnitude += integrate(slope, rgrid[i], rgrid[i + 1], segment_options).value;
    const double t = slope(rgrid[i]);
    profile.samples[i] = RadialSample{rgrid[i], std::copysign(magnitude.value(), a), -std::copysign(t, a), 1.0 - t};
  }

  if (2 * m > dim) {
    const double q = 2.0 * m - 1.0;
    const double r1 = rgrid[0];
    const auto inner = [&slope, q, r1](double w) {
      if (!(w > 0.0)) return 0.0;
      const double wq1 = std::pow(w, q - 1.0);
      return q * r1 * wq1 * slope(r1 * wq1 * w);
    };
    magnitude += integrate(inner, 0.0, 1.0, segment_options).value;
    profile.center_value = std::copysign(magnitude.value(), a);
  }
  return profile;
}

SingularityFit fit_singularity(const RadialProfile& profile, FitWindow window) {
  if (profile.samples.empty()) throw InvalidArgument("fit_singularity needs a sampled profile");
  if (!(window.r_min > 0.0) || !(window.r_max > window.r_min)) throw InvalidArgument("fit window must satisfy 0 < r_min < r_max");
  const double tol = 1e-12;
  if (window.r_min < profile.samples.front().r * (1.0 - tol) || window.r_max > profile.samples.back().r * (1.0 + tol)) {
    throw InvalidArgument("fit window lies outside the sampled radii");
  }
  const double far_scale = std::pow(std::abs(profile.strength) / sphere_measure(profile.dim), 1.0 / (profile.dim - 1));
  if (window.r_max > 1e-2 * far_scale * (1.0 + tol)) {
    throw InvalidArgument("fit window reaches beyond 1e-2 of the far-field scale");
  }

  const bool centered = profile.center_value.has_value();
  const double center = centered ? *profile.center_value : 0.0;
  std::vector<double> x;
  std::vector<double> yu;
  std::vector<double> ydu;
  double su = 0.0;
  double sdu = 0.0;
  for (const auto& s : profile.samples) {
    if (s.r < window.r_min * (1.0 - tol) || s.r > window.r_max * (1.0 + tol)) continue;
    const double du = s.u - center;
    x.push_back(std::log(s.r));
    yu.push_back(std::log(std::abs(du)));
    ydu.push_back(std::log(std::abs(s.du)));
    su += du;
    sdu += s.du;
  }
  if (x.size() < 8) throw InvalidArgument("fit window holds " + std::to_string(x.size()) + " samples; need at least 8");

  const auto line = [&x, window](const std::vector<double>& y, double sign) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      mx += x[i];
      my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sxx += (x[i] - mx) * (x[i] - mx);
      sxy += (x[i] - mx) * (y[i] - my);
    }
    FitResult fit;
    fit.exponent = sxy / sxx;
    const double intercept = my - fit.exponent * mx;
    fit.coefficient = std::exp(intercept);
    fit.sign = sign;
    for (std::size_t i = 0; i < x.size(); ++i) {
      fit.residual = std::max(fit.residual, std::abs(y[i] - (intercept + fit.exponent * x[i])));
    }
    fit.window = window;
    fit.samples = static_cast<int>(x.size());
    return fit;
  };

  SingularityFit out;
  out.u = line(yu, su < 0.0 ? -1.0 : 1.0);
  out.du = line(ydu, sdu < 0.0 ? -1.0 : 1.0);
  out.centered = centered;
  out.guaranteed = profile.kind == ProfileKind::Approximant && asymptotics_guaranteed(profile.order, profile.dim);
  return out;
}

double cone_tail_energy(double R, int dim) {
  require_dim(dim);
  const double n = dim;
  const double lower = (n - 2.0) / (n - 1.0);
  if (!(R >= lower * (1.0 - 1e-12) && R <= 1.0)) {
    throw InvalidArgument("cone-tail kink R must lie in [(N-2)/(N-1), 1]");
  }
  return std::pow(R, n) / n + (n - 2.0) * std::pow(R, n - 2.0) * (1.0 - R) * (1.0 - R);
}

double ConeTailCandidate::gradient(double r) const {
  const double rho = r / scale;
  if (rho < R) return -1.0;
  return -(dim - 2) * c1 * std::pow(rho, 1 - dim);
}

double ConeTailCandidate::value(double r) const {
  const double rho = r / scale;
  if (rho < R) return scale * (1.0 - rho);
  return scale * c1 * std::pow(rho, 2 - dim);
}

ConeTailCandidate make_cone_tail(int dim, double R, double scale) {
  cone_tail_energy(R, dim);  // validates dim and R
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidArgument("cone-tail scale must be positive");
  return ConeTailCandidate{dim, R, std::pow(R, dim - 2) * (1.0 - R), scale};
}

double spacelike_ratio(const ConeTailCandidate& c) {
  QuadratureOptions options;
  options.abs_tol = 1e-13;
  const int k = c.dim - 1;
  const auto density = [&c, k](double r) {
    const double g = c.gradient(r);
    return g * g * std::pow(r, k);
  };
  const double kink = c.scale * c.R;
  CompensatedSum dirichlet;
  dirichlet += integrate(density, 0.0, kink, options).value;
  if (c.c1 > 0.0) dirichlet += integrate_decaying(density, kink, options).value;
  return sphere_measure(c.dim) * dirichlet.value() / std::pow(c.scale, c.dim);
}

double spacelike_ratio(const RadialProfile& profile) {
  if (profile.kind != ProfileKind::ExactBornInfeld) {
    throw InvalidArgument("approximant profiles are not weakly spacelike (|u'| is unbounded at the charge)");
  }
  if (!profile.center_value || *profile.center_value == 0.0) throw InvalidArgument("spacelike_ratio of the zero function");
  QuadratureOptions options;
  options.abs_tol = 1e-13;
  const int dim = profile.dim;
  const double a = profile.strength;
  const auto density = [a, dim](double r) {
    const double g = exact_profile_gradient(a, dim, r);
    return g * g * std::pow(r, dim - 1);
  };
  const double dirichlet = integrate_decaying(density, 0.0, options).value;
  return sphere_measure(dim) * dirichlet / std::pow(std::abs(*profile.center_value), dim);
}

}  // namespace bistat
