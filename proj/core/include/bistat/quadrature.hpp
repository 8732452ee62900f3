#pragma once

#include <functional>
#include <limits>

namespace bistat {

using ScalarFunction = std::function<double(double)>;

struct QuadratureOptions {
  double abs_tol = 1e-10;
  /// Relative tolerance; the target is max(abs_tol, rel_tol * |value|).
  double rel_tol = 0.0;
  /// Bisections allowed per integration range before AccuracyFailure.
  int max_subdivisions = 60;
  /// Length scale of the tail map s = R + L ((1 - tau)^{-2} - 1); 0 picks max(1, R).
  double tail_scale = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  ///< sum of |K21 - G10| over the final partition
  int subdivisions = 0;
  int evaluations = 0;
};

/// Globally adaptive 21-point Gauss-Kronrod on the finite interval [a, b].
/// Integrands are never evaluated at the endpoints.
QuadratureResult integrate(const ScalarFunction& f, double a, double b, const QuadratureOptions& options = {});

/// Integral over [r0, inf) of an integrand decaying like s^{-p}, p > 1.
/// Splits at R = r0 + max(1, r0): GK21 on [r0, R] and on the tail mapped to
/// tau in [0, 1) via s = R + L ((1 - tau)^{-2} - 1). The mapped integrand
/// behaves like (1 - tau)^{2p-3}, so decay p >= 3/2 gives a bounded tail
/// integrand; slower decay leaves an endpoint singularity on which the error
/// estimate is optimistic. The tolerance budget is shared between the pieces.
QuadratureResult integrate_decaying(const ScalarFunction& f, double r0, const QuadratureOptions& options = {});
QuadratureResult integrate_decaying(const ScalarFunction& f, double r0, double abs_tol);

}  // namespace bistat
