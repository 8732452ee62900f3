#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "bistat/grid.hpp"

namespace bistat {

// Discrete order-m energy on cubic cells of side h:
//
//   I(u) = (h^3/8) sum_cells sum_corners W(p_c) - sum_k a_k u(node_k),
//   W(p) = sum_h alpha_h/(2h) |p|^{2h},
//
// where p_c is the one-sided gradient at corner c of the cell, built from the
// three cell edges meeting at c. Every edge difference enters, so the only
// null mode of the gradient map is the constant, and for m = 1 the energy
// reduces to the 7-point Laplacian form (h/2) sum_edges (u_i - u_j)^2.
//
// Vectors live on the full lattice; boundary entries of u carry the Dirichlet
// data and boundary entries of gradients and Hessian products are zero.

double discrete_energy(const DiscreteProblem& problem, std::span<const double> u);

/// dI/du at interior nodes.
std::vector<double> energy_gradient(const DiscreteProblem& problem, std::span<const double> u);

/// Hessian of I at u applied to v (interior rows only; v is read at interior nodes).
void hessian_apply(const DiscreteProblem& problem, std::span<const double> u, std::span<const double> v,
                   std::span<double> out);

/// Diagonal of the Hessian at u (interior rows; boundary entries set to 1).
std::vector<double> hessian_diagonal(const DiscreteProblem& problem, std::span<const double> u);

/// (h^3/8) sum_cells sum_corners |p_c|^2, the discrete ||grad u||_2^2.
double dirichlet_norm_sq(const GridShape& shape, std::span<const double> u);

/// Maximum corner-gradient magnitude over the cells of one lattice.
struct CellGradient {
  std::size_t cell_base = 0;  ///< flat index of the cell's lowest corner
  double magnitude = 0.0;
};
/// Invokes visit(CellGradient) for every cell with its largest corner gradient.
template <class Visitor>
void for_each_cell_gradient(const GridShape& shape, std::span<const double> u, Visitor&& visit);

}  // namespace bistat

#include "bistat/detail/cell_loop.hpp"

namespace bistat {

template <class Visitor>
void for_each_cell_gradient(const GridShape& shape, std::span<const double> u, Visitor&& visit) {
  detail::CellStencil stencil(shape);
  detail::for_each_cell(shape, [&](std::size_t base) {
    detail::CellEdges edges;
    stencil.load(u, base, edges);
    double best = 0.0;
    for (int c = 0; c < 8; ++c) {
      const auto p = edges.corner(c);
      best = std::max(best, p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    }
    visit(CellGradient{base, std::sqrt(best)});
  });
}

}  // namespace bistat
