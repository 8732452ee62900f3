#pragma once

namespace bistat {

/// omega_{N-1} = 2 pi^{N/2} / Gamma(N/2), the area of the unit sphere in R^N.
double sphere_measure(int dim);

/// Best constant of ||grad u||_2^2 >= C ||u||_inf^N over weakly spacelike
/// finite-energy functions: (2/N) ((N-2)/(N-1))^{N-1} omega_{N-1}.
double best_constant_cbar(int dim);

/// Whether the growth laws at a charge are proven for order m in dimension N,
/// i.e. 2m > max{N, 2N/(N-2)}.
bool asymptotics_guaranteed(int m, int dim);

enum class GuaranteePolicy {
  Enforce,   ///< throw GuaranteeOutOfRange outside the proven range
  Override,  ///< compute anyway and mark the result unguaranteed
};

/// Local behaviour of the order-m approximant at a charge of strength a:
///   u(x) - u(x_k) ~ K_m |x - x_k|^{(2m-N)/(2m-1)}
///   |grad u(x)|   ~ K'_m |x - x_k|^{(1-N)/(2m-1)}
struct AsymptoticsSpec {
  int order = 0;
  int dim = 0;
  double strength = 0.0;
  double kappa = 0.0;          ///< fundamental-solution constant kappa_m(N) < 0
  double gamma = 0.0;          ///< sign(a) (|a|/alpha_m)^{1/(2m-1)}
  double K = 0.0;              ///< gamma * kappa; K * a < 0
  double K_prime = 0.0;        ///< ((2m-N)/(2m-1)) |K|
  double u_exponent = 0.0;     ///< (2m-N)/(2m-1)
  double grad_exponent = 0.0;  ///< (1-N)/(2m-1)
  double holder = 0.0;         ///< beta_m = 1 - N/(2m)
  bool guaranteed = false;
};

/// Throws InvalidArgument for dim < 3, a == 0 or 2m <= N (the constants
/// degenerate there); GuaranteeOutOfRange when the proven range is left and
/// the policy is Enforce.
AsymptoticsSpec asymptotics_spec(int m, int dim, double a, GuaranteePolicy policy = GuaranteePolicy::Enforce);

}  // namespace bistat
