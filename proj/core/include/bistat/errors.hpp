#pragma once

#include <stdexcept>
#include <string>

namespace bistat {

/// A precondition on the arguments of a public operation does not hold.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class AccuracyFailure : public std::runtime_error {
 public:
  AccuracyFailure(const std::string& what, double estimate, double error_bound);

  /// Best available value of the integral.
  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

/// Asymptotic constants requested outside the range where the growth laws
/// are proven (2m <= max{N, 2N/(N-2)}).
class GuaranteeOutOfRange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A certificate was asked for data it does not cover (e.g. two-charge rule
/// on a same-sign pair).
class NotApplicable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bistat
