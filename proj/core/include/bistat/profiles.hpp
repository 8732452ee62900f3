#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bistat/quadrature.hpp"

namespace bistat {

enum class ProfileKind {
  ExactBornInfeld,  ///< single-charge solution of the Born-Infeld equation
  Approximant,      ///< single-charge solution of the order-m approximating problem
};

struct RadialSample {
  double r;
  double u;
  double du;
  /// 1 - |du|. For the exact profile this is evaluated without cancellation,
  /// so it stays positive where |du| itself rounds to 1.
  double light_gap;
};

/// Sampled radial solution u(|x|) for one charge of strength a at the origin,
/// normalised by u -> 0 as r -> infinity.
struct RadialProfile {
  int dim = 3;
  double strength = 0.0;
  ProfileKind kind = ProfileKind::ExactBornInfeld;
  int order = 0;  ///< approximation order m; 0 for the exact profile
  std::vector<RadialSample> samples;
  /// u(0+) when it is finite (exact profile, and approximants with 2m > N).
  std::optional<double> center_value;
  std::vector<std::string> warnings;
};

/// A(N) = omega_{N-1}^{-1/(N-1)} int_0^inf ds / sqrt(s^{2(N-1)} + 1).
/// Computed to absolute tolerance 1e-12 unless options are given.
double shape_constant_A(int dim);
double shape_constant_A(int dim, const QuadratureOptions& options);

/// Refined constant of int (1 - sqrt(1 - |grad u|^2)) >= C~ ||u||_inf^N,
/// evaluated as a ratio of two half-line integrals.
double refined_constant_ctilde(int dim);
double refined_constant_ctilde(int dim, const QuadratureOptions& options);

/// Closed-form gradient of the exact single-charge profile:
///   u'(r) = -(a/w) / sqrt(r^{2(N-1)} + (a/w)^2),  w = omega_{N-1}.
double exact_profile_gradient(double a, int dim, double r);

/// 1 - |u'(r)| for the exact profile, as rho^2 / (q (q + c)) with
/// rho = r^{N-1}, c = |a|/w and q = sqrt(rho^2 + c^2).
double exact_profile_light_gap(double a, int dim, double r);

/// Samples the exact single-charge profile on a strictly increasing grid of
/// positive radii. u is integrated from the right: the tail beyond the last
/// radius by integrate_decaying, then grid segment by segment.
RadialProfile exact_radial_profile(double a, int dim, std::span<const double> rgrid,
                                   const QuadratureOptions& options = {});

/// Validates a radius grid (non-empty, positive, strictly increasing).
void require_radius_grid(std::span<const double> rgrid);

/// n radii log-spaced on [r_min, r_max] inclusive.
std::vector<double> log_spaced(double r_min, double r_max, std::size_t n);

}  // namespace bistat
