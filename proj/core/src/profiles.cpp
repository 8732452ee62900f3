#include "bistat/profiles.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "bistat/constants.hpp"
#include "bistat/errors.hpp"
#include "bistat/summation.hpp"

namespace bistat {
namespace {

constexpr double kConstantTolerance = 1e-12;

QuadratureOptions constant_options() {
  QuadratureOptions options;
  options.abs_tol = kConstantTolerance;
  return options;
}

// int_0^inf ds / sqrt(s^{2k} + 1)
double central_integral(int k, const QuadratureOptions& options) {
  const auto f = [k](double s) { return 1.0 / std::sqrt(std::pow(s, 2 * k) + 1.0); };
  return integrate_decaying(f, 0.0, options).value;
}

// int_0^inf r^k (1 - r^k / sqrt(r^{2k} + 1)) dr, with the bracket rewritten
// as 1 / (sqrt(x^2+1) (sqrt(x^2+1) + x)), x = r^k, to avoid cancellation.
double deficit_integral(int k, const QuadratureOptions& options) {
  const auto f = [k](double r) {
    const double x = std::pow(r, k);
    if (x > 1e100) return 0.5 / x;
    const double root = std::sqrt(x * x + 1.0);
    return x / (root * (root + x));
  };
  return integrate_decaying(f, 0.0, options).value;
}

}  // namespace

double shape_constant_A(int dim) { return shape_constant_A(dim, constant_options()); }

double shape_constant_A(int dim, const QuadratureOptions& options) {
  if (dim < 3) throw InvalidArgument("shape_constant_A needs N >= 3, got " + std::to_string(dim));
  const int k = dim - 1;
  return std::pow(sphere_measure(dim), -1.0 / k) * central_integral(k, options);
}

double refined_constant_ctilde(int dim) { return refined_constant_ctilde(dim, constant_options()); }

double refined_constant_ctilde(int dim, const QuadratureOptions& options) {
  if (dim < 3) throw InvalidArgument("refined_constant_ctilde needs N >= 3, got " + std::to_string(dim));
  const int k = dim - 1;
  return sphere_measure(dim) * deficit_integral(k, options) / std::pow(central_integral(k, options), dim);
}

double exact_profile_gradient(double a, int dim, double r) {
  const double c = std::abs(a) / sphere_measure(dim);
  return -std::copysign(c / std::sqrt(std::pow(r, 2 * (dim - 1)) + c * c), a);
}

double exact_profile_light_gap(double a, int dim, double r) {
  const double c = std::abs(a) / sphere_measure(dim);
  const double rho = std::pow(r, dim - 1);
  const double q = std::hypot(rho, c);
  return rho / q * (rho / (q + c));
}

void require_radius_grid(std::span<const double> rgrid) {
  if (rgrid.empty()) throw InvalidArgument("radius grid is empty");
  for (std::size_t i = 0; i < rgrid.size(); ++i) {
    if (!(rgrid[i] > 0.0) || !std::isfinite(rgrid[i])) throw InvalidArgument("radius grid must be positive and finite");
    if (i > 0 && !(rgrid[i] > rgrid[i - 1])) throw InvalidArgument("radius grid must be strictly increasing");
  }
}

std::vector<double> log_spaced(double r_min, double r_max, std::size_t n) {
  if (!(r_min > 0.0) || !(r_max > r_min) || n < 2) throw InvalidArgument("log_spaced needs 0 < r_min < r_max and n >= 2");
  std::vector<double> out(n);
  const double lo = std::log(r_min);
  const double step = (std::log(r_max) - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(lo + step * static_cast<double>(i));
  out.front() = r_min;
  out.back() = r_max;
  return out;
}

RadialProfile exact_radial_profile(double a, int dim, std::span<const double> rgrid,
                                   const QuadratureOptions& options) {
  if (a == 0.0 || !std::isfinite(a)) throw InvalidArgument("exact_radial_profile needs a finite nonzero charge");
  if (dim < 3) throw InvalidArgument("exact_radial_profile needs N >= 3, got " + std::to_string(dim));
  require_radius_grid(rgrid);

  const int k = dim - 1;
  const double c = std::abs(a) / sphere_measure(dim);
  const auto slope = [c, k](double s) { return c / std::sqrt(std::pow(s, 2 * k) + c * c); };

  QuadratureOptions segment_options = options;
  segment_options.abs_tol = options.abs_tol / static_cast<double>(rgrid.size() + 1);

  const std::size_t n = rgrid.size();
  RadialProfile profile;
  profile.dim = dim;
  profile.strength = a;
  profile.kind = ProfileKind::ExactBornInfeld;
  profile.samples.resize(n);

  CompensatedSum magnitude;
  magnitude += integrate_decaying(slope, rgrid[n - 1], segment_options).value;
  for (std::size_t i = n; i-- > 0;) {
    if (i + 1 < n) magnitude += integrate(slope, rgrid[i], rgrid[i + 1], segment_options).value;
    profile.samples[i] = RadialSample{rgrid[i], std::copysign(magnitude.value(), a), exact_profile_gradient(a, dim, rgrid[i]),
                                     exact_profile_light_gap(a, dim, rgrid[i])};
  }

  const double center = std::copysign(std::pow(std::abs(a), 1.0 / k) * shape_constant_A(dim), a);
  profile.center_value = center;
  if (n >= 2) {
    const auto& s1 = profile.samples[0];
    const auto& s2 = profile.samples[1];
    const double extrapolated = s1.u + s1.r * (s1.u - s2.u) / (s2.r - s1.r);
    if (std::abs(extrapolated - center) > 1e-5) {
      std::ostringstream msg;
      msg.precision(10);
      msg << "u(0+) extrapolated from the two smallest radii (" << extrapolated
          << ") differs from the closed form (" << center << ")";
      profile.warnings.push_back(msg.str());
    }
  }
  return profile;
}

}  // namespace bistat
