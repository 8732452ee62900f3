#include "bistat/constants.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bistat/coefficients.hpp"
#include "bistat/errors.hpp"

namespace bistat {

double sphere_measure(int dim) {
  if (dim < 2) throw InvalidArgument("sphere_measure needs N >= 2, got " + std::to_string(dim));
  const double half = 0.5 * dim;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double best_constant_cbar(int dim) {
  if (dim < 3) throw InvalidArgument("best_constant_cbar needs N >= 3, got " + std::to_string(dim));
  const double n = dim;
  return (2.0 / n) * std::pow((n - 2.0) / (n - 1.0), n - 1.0) * sphere_measure(dim);
}

bool asymptotics_guaranteed(int m, int dim) {
  // 2m > N and 2m > 2N/(N-2), the latter in integers: m (N-2) > N.
  return 2 * m > dim && static_cast<long long>(m) * (dim - 2) > dim;
}

AsymptoticsSpec asymptotics_spec(int m, int dim, double a, GuaranteePolicy policy) {
  if (dim < 3) throw InvalidArgument("asymptotics_spec needs N >= 3, got " + std::to_string(dim));
  if (a == 0.0 || !std::isfinite(a)) throw InvalidArgument("asymptotics_spec needs a finite nonzero charge");
  if (m < 1) throw InvalidArgument("approximation order must be >= 1, got " + std::to_string(m));
  if (2 * m <= dim) {
    throw InvalidArgument("asymptotic constants degenerate for 2m <= N (m=" + std::to_string(m) +
                          ", N=" + std::to_string(dim) + ")");
  }
  const bool guaranteed = asymptotics_guaranteed(m, dim);
  if (!guaranteed && policy == GuaranteePolicy::Enforce) {
    throw GuaranteeOutOfRange("2m > max{N, 2N/(N-2)} violated for m=" + std::to_string(m) +
                              ", N=" + std::to_string(dim));
  }

  const double n = dim;
  const double q = 2.0 * m - 1.0;
  const double alpha_m = taylor_coefficients(m).alpha(m);

  AsymptoticsSpec spec;
  spec.order = m;
  spec.dim = dim;
  spec.strength = a;
  spec.kappa = -(q / (2.0 * m - n)) * std::pow(sphere_measure(dim), -1.0 / q);
  spec.gamma = std::copysign(std::pow(std::abs(a) / alpha_m, 1.0 / q), a);
  spec.K = spec.gamma * spec.kappa;
  spec.u_exponent = (2.0 * m - n) / q;
  spec.grad_exponent = (1.0 - n) / q;
  spec.K_prime = spec.u_exponent * std::abs(spec.K);
  spec.holder = 1.0 - n / (2.0 * m);
  spec.guaranteed = guaranteed;
  return spec;
}

}  // namespace bistat
