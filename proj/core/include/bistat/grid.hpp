#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bistat/charges.hpp"
#include "bistat/coefficients.hpp"

namespace bistat {

/// Axis-aligned box [lo, hi] in R^3.
struct Box {
  std::array<double, 3> lo{};
  std::array<double, 3> hi{};

  static Box cube(double half_width) {
    return Box{{-half_width, -half_width, -half_width}, {half_width, half_width, half_width}};
  }
};

using NodeIndex = std::array<int, 3>;

/// Uniform node lattice lo + h * (i, j, k), 0 <= i < n[0] etc.
/// Flat index i + n0 (j + n1 k).
struct GridShape {
  std::array<int, 3> n{};
  double h = 0.0;
  std::array<double, 3> lo{};

  std::size_t node_count() const noexcept {
    return static_cast<std::size_t>(n[0]) * static_cast<std::size_t>(n[1]) * static_cast<std::size_t>(n[2]);
  }
  std::size_t flat(int i, int j, int k) const noexcept {
    return static_cast<std::size_t>(i) +
           static_cast<std::size_t>(n[0]) * (static_cast<std::size_t>(j) + static_cast<std::size_t>(n[1]) * static_cast<std::size_t>(k));
  }
  std::size_t flat(const NodeIndex& idx) const noexcept { return flat(idx[0], idx[1], idx[2]); }
  NodeIndex unflat(std::size_t f) const noexcept {
    const auto n0 = static_cast<std::size_t>(n[0]);
    const auto n1 = static_cast<std::size_t>(n[1]);
    return {static_cast<int>(f % n0), static_cast<int>((f / n0) % n1), static_cast<int>(f / (n0 * n1))};
  }
  bool on_boundary(int i, int j, int k) const noexcept {
    return i == 0 || j == 0 || k == 0 || i == n[0] - 1 || j == n[1] - 1 || k == n[2] - 1;
  }
  std::array<double, 3> position(const NodeIndex& idx) const noexcept {
    return {lo[0] + h * idx[0], lo[1] + h * idx[1], lo[2] + h * idx[2]};
  }
  bool operator==(const GridShape&) const = default;
};

enum class BoundaryRule {
  Zero,
  RadialSuperposition,  ///< sum of exact single-charge profiles centred at each charge
};

struct GridCharge {
  std::size_t source = 0;  ///< index into the originating ChargeConfig
  double strength = 0.0;
  NodeIndex node{};
  double snap_distance = 0.0;  ///< |x_k - snapped node|
};

/// Discrete order-m problem: fixed boundary values, charges paired with the
/// nodal value at their snapped node.
struct DiscreteProblem {
  GridShape shape;
  int order = 1;
  CoefficientTable coefficients = taylor_coefficients(1);
  BoundaryRule boundary_rule = BoundaryRule::Zero;
  std::vector<GridCharge> charges;
  /// Full-lattice vector; boundary entries are the Dirichlet data, interior entries 0.
  std::vector<double> dirichlet;
  std::optional<ChargeConfig> config;
};

/// Minimum number of grid steps between the two closest charges.
inline constexpr double kMinStepsBetweenCharges = 8.0;

/// Builds the discrete problem. Requirements (InvalidArgument otherwise):
/// N = 3; every edge of the box a multiple of h; every charge strictly inside
/// with clearance to each face >= 2x the minimum charge spacing (8h for a
/// single charge); snapped charges at least 8h apart.
DiscreteProblem assemble_problem(const ChargeConfig& config, const Box& box, double h, int m,
                                 BoundaryRule rule = BoundaryRule::RadialSuperposition);

/// Charge-free problem with zero boundary data.
DiscreteProblem assemble_problem(const Box& box, double h, int m);

std::string_view to_string(BoundaryRule rule);

}  // namespace bistat
