#pragma once

#include <memory>
#include <span>

#include "bistat/grid.hpp"

namespace bistat::detail {

/// Exact inverse of the m = 1 Hessian h (6 I - adjacency) on the interior
/// nodes with homogeneous Dirichlet data, applied through a 3D DST-I.
class PoissonPreconditioner {
 public:
  explicit PoissonPreconditioner(const GridShape& shape);
  ~PoissonPreconditioner();
  PoissonPreconditioner(const PoissonPreconditioner&) = delete;
  PoissonPreconditioner& operator=(const PoissonPreconditioner&) = delete;

  /// out = H0^{-1} r on interior nodes; boundary entries of out are zero.
  void apply(std::span<const double> r, std::span<double> out);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace bistat::detail
