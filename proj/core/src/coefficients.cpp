#include "bistat/coefficients.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "bistat/errors.hpp"
#include "bistat/summation.hpp"

namespace bistat {
namespace {
__extension__ typedef unsigned __int128 Wide;
}  // namespace

CoefficientTable::CoefficientTable(std::vector<double> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty()) throw InvalidArgument("coefficient table needs at least one coefficient");
}

double CoefficientTable::density(double s) const noexcept {
  // Horner in s over c_h = alpha_h / (2h), h = m..1, then one extra factor s.
  double acc = 0.0;
  for (int h = order(); h >= 1; --h) acc = acc * s + alphas_[h - 1] / (2.0 * h);
  return acc * s;
}

double CoefficientTable::flux_factor(double s) const noexcept {
  double acc = 0.0;
  for (int h = order(); h >= 1; --h) acc = acc * s + alphas_[h - 1];
  return acc;
}

double CoefficientTable::flux_slope(double s) const noexcept {
  double acc = 0.0;
  for (int h = order(); h >= 2; --h) acc = acc * s + alphas_[h - 1] * (h - 1);
  return 2.0 * acc;
}

double CoefficientTable::flux_derivative(double t) const noexcept {
  const double s = t * t;
  double acc = 0.0;
  for (int h = order(); h >= 1; --h) acc = acc * s + alphas_[h - 1] * (2 * h - 1);
  return acc;
}

CoefficientTable taylor_coefficients(int m) {
  if (m < 1) throw InvalidArgument("approximation order must be >= 1, got " + std::to_string(m));
  std::vector<double> alphas(static_cast<std::size_t>(m));
  // alpha_{k+1} = C(2k, k) / 4^k. While the central binomial fits in 64 bits
  // (k <= 33) the only rounding is its conversion to double, so these entries
  // are correctly rounded. The recurrence takes over from there.
  std::uint64_t binomial = 1;
  int k = 0;
  for (; k < m; ++k) {
    alphas[static_cast<std::size_t>(k)] = std::ldexp(static_cast<double>(binomial), -2 * k);
    const Wide next = static_cast<Wide>(binomial) * (2 * (2 * k + 1)) / (k + 1);
    if (next > std::numeric_limits<std::uint64_t>::max()) {
      ++k;
      break;
    }
    binomial = static_cast<std::uint64_t>(next);
  }
  for (int h = k; h < m; ++h) {
    alphas[h] = alphas[h - 1] * (2.0 * h - 1.0) / (2.0 * h);
  }
  return CoefficientTable(std::move(alphas));
}

double lagrangian_partial_sum(double t, int m, Summation mode) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("lagrangian_partial_sum needs t in [0, 1]");
  if (m < 1) throw InvalidArgument("approximation order must be >= 1, got " + std::to_string(m));
  const double s = t * t;
  double alpha = 1.0;
  double power = s;
  if (mode == Summation::Compensated) {
    CompensatedSum sum;
    for (int h = 1; h <= m; ++h) {
      sum += alpha / (2.0 * h) * power;
      alpha *= (2.0 * h - 1.0) / (2.0 * h);
      power *= s;
    }
    return sum.value();
  }
  double sum = 0.0;
  for (int h = 1; h <= m; ++h) {
    sum += alpha / (2.0 * h) * power;
    alpha *= (2.0 * h - 1.0) / (2.0 * h);
    power *= s;
  }
  return sum;
}

}  // namespace bistat
