#pragma once

#include <span>
#include <utility>

#include "bistat/coefficients.hpp"
#include "bistat/profiles.hpp"

namespace bistat {

/// |u'(r)| of the order-m single-charge approximant: the unique t >= 0 with
///   g(t) = sum_h alpha_h t^{2h-1} = |a| / (omega_{N-1} r^{N-1}).
/// Newton from the right-hand bracket min(target, (target/alpha_m)^{1/(2m-1)}),
/// falling back to bisection whenever a step leaves the bracket.
double flux_gradient_magnitude(double r, double a, int m, int dim);
double flux_gradient_magnitude(double r, double a, const CoefficientTable& table, int dim);

/// Samples the order-m approximant: u' = -sign(a) t(r), u(r) = -int_r^inf u'.
/// When 2m > N the center value u(0+) is computed as well, integrating
/// t on (0, r_min] after the substitution s = r_min w^{2m-1}, which removes the
/// integrable singularity at the charge.
RadialProfile approx_radial_profile(double a, int m, int dim, std::span<const double> rgrid,
                                    const QuadratureOptions& options = {});

struct FitWindow {
  double r_min = 1e-6;
  double r_max = 1e-4;
};

/// Least-squares line through (log r, log y) on the window samples.
struct FitResult {
  double exponent = 0.0;
  double coefficient = 0.0;  ///< exp(intercept), always positive
  double sign = 1.0;         ///< sign of the fitted quantity
  double residual = 0.0;     ///< max |log y - fit| over the window
  FitWindow window;
  int samples = 0;
};

struct SingularityFit {
  FitResult u;   ///< y = |u(r) - u(0+)|, or |u(r)| when u(0+) is infinite
  FitResult du;  ///< y = |u'(r)|
  bool guaranteed = false;
  bool centered = false;  ///< whether u(0+) was finite and subtracted
};

/// Requires >= 8 samples in the window, the window inside the sampled range,
/// and r_max <= 1e-2 (|a| / omega_{N-1})^{1/(N-1)}.
SingularityFit fit_singularity(const RadialProfile& profile, FitWindow window = {});

/// E(R) = R^N/N + (N-2) R^{N-2} (1-R)^2, Dirichlet energy (per unit sphere
/// area) of the cone-plus-harmonic-tail function with kink at R.
double cone_tail_energy(double R, int dim);

/// u(r) = scale * v(r/scale) where v = 1 - r on (0, R) and c1 r^{2-N} beyond,
/// c1 = R^{N-2}(1-R). Spacelike iff R >= (N-2)/(N-1).
struct ConeTailCandidate {
  int dim = 3;
  double R = 1.0;
  double c1 = 0.0;
  double scale = 1.0;

  double gradient(double r) const;
  double value(double r) const;
};

ConeTailCandidate make_cone_tail(int dim, double R, double scale = 1.0);

/// omega_{N-1} int u'^2 r^{N-1} dr / (sup |u|)^N, by quadrature.
double spacelike_ratio(const ConeTailCandidate& candidate);
/// Same ratio for a sampled profile. Only exact Born-Infeld profiles qualify;
/// approximants have unbounded gradient at the charge.
double spacelike_ratio(const RadialProfile& profile);

}  // namespace bistat
