#include "bistat/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <tuple>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bistat/errors.hpp"
#include "bistat/summation.hpp"

namespace bistat {
namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
using Gauss = boost::math::quadrature::gauss<double, 10>;

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double floor;  // roundoff level of this segment's value
  bool operator<(const Segment& other) const { return error < other.error; }
};

// GK21 on [a, b]. Kronrod abscissae are ordered 0, x1, x2, ... with the odd
// entries shared with the 10-point Gauss rule.
Segment apply_rule(const ScalarFunction& f, double a, double b) {
  const auto& xk = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double kronrod = wk[0] * fc;
  double gauss = 0.0;
  double absolute = std::abs(kronrod);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double dx = half * xk[i];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += wk[i] * (f1 + f2);
    absolute += wk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) gauss += wg[i / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  absolute *= std::abs(half);

  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * absolute;
  return Segment{a, b, kronrod, std::max(std::abs(kronrod - gauss), roundoff), roundoff};
}

QuadratureResult adaptive(const ScalarFunction& f, double a, double b, double abs_tol, double rel_tol,
                          int max_subdivisions) {
  constexpr int kEvaluationsPerRule = 21;
  std::priority_queue<Segment> work;
  Segment first = apply_rule(f, a, b);
  if (!std::isfinite(first.value)) {
    throw AccuracyFailure("integrand is not finite on the integration range", first.value,
                          std::numeric_limits<double>::infinity());
  }
  work.push(first);

  QuadratureResult result;
  result.evaluations = kEvaluationsPerRule;

  auto totals = [&work]() {
    auto copy = work;
    CompensatedSum value;
    CompensatedSum error;
    CompensatedSum floor;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      floor += copy.top().floor;
      copy.pop();
    }
    return std::tuple{value.value(), error.value(), floor.value()};
  };

  double value = first.value;
  double error = first.error;
  double floor = first.floor;
  while (true) {
    // Once every segment sits at its roundoff level no bisection can help.
    const double target = std::max({abs_tol, rel_tol * std::abs(value), floor});
    if (error <= target) break;

    const Segment worst = work.top();
    const double mid = 0.5 * (worst.a + worst.b);
    const bool exhausted = result.subdivisions >= max_subdivisions;
    const bool unresolvable = !(mid > worst.a && mid < worst.b);
    if (exhausted || unresolvable) {
      std::ostringstream msg;
      msg << "quadrature on [" << a << ", " << b << "] did not reach tolerance " << target << " after "
          << result.subdivisions << " subdivisions (error estimate " << error << ")";
      throw AccuracyFailure(msg.str(), value, error);
    }
    work.pop();
    Segment left = apply_rule(f, worst.a, mid);
    Segment right = apply_rule(f, mid, worst.b);
    if (!std::isfinite(left.value) || !std::isfinite(right.value)) {
      throw AccuracyFailure("integrand is not finite on the integration range", value, error);
    }
    work.push(left);
    work.push(right);
    result.evaluations += 2 * kEvaluationsPerRule;
    ++result.subdivisions;
    std::tie(value, error, floor) = totals();
  }
  result.value = value;
  result.error = error;
  return result;
}

}  // namespace

QuadratureResult integrate(const ScalarFunction& f, double a, double b, const QuadratureOptions& options) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidArgument("integrate needs finite limits");
  if (!(options.abs_tol > 0.0) && !(options.rel_tol > 0.0)) throw InvalidArgument("quadrature tolerance must be positive");
  if (a == b) return {};
  if (a > b) {
    QuadratureResult r = adaptive(f, b, a, options.abs_tol, options.rel_tol, options.max_subdivisions);
    r.value = -r.value;
    return r;
  }
  return adaptive(f, a, b, options.abs_tol, options.rel_tol, options.max_subdivisions);
}

QuadratureResult integrate_decaying(const ScalarFunction& f, double r0, const QuadratureOptions& options) {
  if (!(r0 >= 0.0) || !std::isfinite(r0)) throw InvalidArgument("integrate_decaying needs a finite r0 >= 0");
  const double split = r0 + std::max(1.0, r0);
  const double scale = options.tail_scale > 0.0 ? options.tail_scale : std::max(1.0, split);
  const double half_tol = 0.5 * options.abs_tol;

  const QuadratureResult head = adaptive(f, r0, split, half_tol, options.rel_tol, options.max_subdivisions);
  // s = R + L ((1 - tau)^{-2} - 1) turns s^{-p} into (1 - tau)^{2p - 3}, which
  // is bounded at tau = 1 for every p >= 3/2.
  const auto mapped = [&f, split, scale](double tau) {
    const double one_minus = 1.0 - tau;
    const double inv = 1.0 / one_minus;
    const double s = split + scale * (inv * inv - 1.0);
    const double fs = f(s);
    if (fs == 0.0) return 0.0;
    return fs * 2.0 * scale * inv * inv * inv;
  };
  const QuadratureResult tail = adaptive(mapped, 0.0, 1.0, half_tol, options.rel_tol, options.max_subdivisions);

  CompensatedSum total;
  total += head.value;
  total += tail.value;
  return QuadratureResult{total.value(), head.error + tail.error, head.subdivisions + tail.subdivisions,
                          head.evaluations + tail.evaluations};
}

QuadratureResult integrate_decaying(const ScalarFunction& f, double r0, double abs_tol) {
  QuadratureOptions options;
  options.abs_tol = abs_tol;
  return integrate_decaying(f, r0, options);
}

}  // namespace bistat
