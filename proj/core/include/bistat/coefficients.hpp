#pragma once

#include <span>
#include <vector>

namespace bistat {

enum class Summation { Plain, Compensated };

/// Taylor coefficients alpha_1..alpha_m of 1 - sqrt(1 - t), so that
/// 1 - sqrt(1 - s) = sum_h (alpha_h / 2h) s^h for s = |p|^2.
///
/// Besides the raw coefficients the table evaluates the polynomials that the
/// order-m energy and its Euler-Lagrange flux are built from, all in the
/// squared gradient s = |p|^2:
///
///   density(s)       = sum_h alpha_h/(2h) s^h            (energy integrand)
///   flux_factor(s)   = sum_h alpha_h s^(h-1)             (F with dW/dp = F p)
///   flux_slope(s)    = 2 sum_h alpha_h (h-1) s^(h-2)     (G with d2W/dp2 = F I + G p p^T)
class CoefficientTable {
 public:
  explicit CoefficientTable(std::vector<double> alphas);

  int order() const noexcept { return static_cast<int>(alphas_.size()); }
  /// 1-based access, h in [1, order()].
  double alpha(int h) const { return alphas_.at(static_cast<std::size_t>(h - 1)); }
  std::span<const double> alphas() const noexcept { return alphas_; }

  double density(double s) const noexcept;
  double flux_factor(double s) const noexcept;
  double flux_slope(double s) const noexcept;

  /// g(t) = sum_h alpha_h t^(2h-1), the radial flux as a function of |u'|.
  double flux(double t) const noexcept { return t * flux_factor(t * t); }
  /// g'(t) = sum_h alpha_h (2h-1) t^(2h-2).
  double flux_derivative(double t) const noexcept;

 private:
  std::vector<double> alphas_;
};

/// alpha_1 = 1, alpha_{h+1} = alpha_h (2h-1)/(2h); throws InvalidArgument for m < 1.
CoefficientTable taylor_coefficients(int m);

/// sum_{h=1..m} (alpha_h / 2h) t^(2h) for t in [0, 1].
double lagrangian_partial_sum(double t, int m, Summation mode = Summation::Plain);

}  // namespace bistat
