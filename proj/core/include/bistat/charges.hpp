#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bistat {

struct PointCharge {
  std::vector<double> position;
  double strength = 0.0;
};

/// A finite superposition of point charges rho = sum_k a_k delta_{x_k} in R^N.
///
/// Construction validates: N >= 3, at least one charge, every strength finite
/// and nonzero, every position of length N with finite coordinates, and all
/// positions pairwise distinct.
class ChargeConfig {
 public:
  ChargeConfig(int dim, std::vector<PointCharge> charges);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return charges_.size(); }
  std::span<const PointCharge> charges() const noexcept { return charges_; }
  const PointCharge& operator[](std::size_t k) const { return charges_.at(k); }

  double distance(std::size_t j, std::size_t l) const;

  /// Smallest pairwise distance; +infinity for a single charge.
  double min_distance() const;

  /// Sum of a_k over the positive charges (0 if there are none).
  double positive_total() const;
  /// Sum of |a_k| over the negative charges (0 if there are none).
  double negative_total() const;

  std::vector<std::size_t> positive_indices() const;
  std::vector<std::size_t> negative_indices() const;

 private:
  int dim_;
  std::vector<PointCharge> charges_;
};

}  // namespace bistat
