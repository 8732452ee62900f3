#include "bistat/energy.hpp"

#include <stdexcept>

#include "bistat/detail/cell_loop.hpp"
#include "bistat/errors.hpp"
#include "bistat/summation.hpp"

namespace bistat {
namespace {

void require_size(const DiscreteProblem& problem, std::size_t size) {
  if (size != problem.shape.node_count()) throw InvalidArgument("field vector does not match the problem lattice");
}

void clear_boundary(const GridShape& shape, std::span<double> v, double fill = 0.0) {
  for (int k = 0; k < shape.n[2]; ++k) {
    for (int j = 0; j < shape.n[1]; ++j) {
      const bool face = k == 0 || j == 0 || k == shape.n[2] - 1 || j == shape.n[1] - 1;
      if (face) {
        for (int i = 0; i < shape.n[0]; ++i) v[shape.flat(i, j, k)] = fill;
      } else {
        v[shape.flat(0, j, k)] = fill;
        v[shape.flat(shape.n[0] - 1, j, k)] = fill;
      }
    }
  }
}

double cell_weight(const GridShape& shape) { return shape.h * shape.h * shape.h / 8.0; }

}  // namespace

double discrete_energy(const DiscreteProblem& problem, std::span<const double> u) {
  require_size(problem, u.size());
  const GridShape& shape = problem.shape;
  const CoefficientTable& table = problem.coefficients;
  const detail::CellStencil stencil(shape);
  CompensatedSum sum;
  detail::for_each_cell(shape, [&](std::size_t base) {
    detail::CellEdges e;
    stencil.load(u, base, e);
    double cell = 0.0;
    for (int c = 0; c < 8; ++c) {
      const auto p = e.corner(c);
      cell += table.density(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    }
    sum += cell;
  });
  double energy = cell_weight(shape) * sum.value();
  for (const GridCharge& q : problem.charges) energy -= q.strength * u[shape.flat(q.node)];
  return energy;
}

std::vector<double> energy_gradient(const DiscreteProblem& problem, std::span<const double> u) {
  require_size(problem, u.size());
  const GridShape& shape = problem.shape;
  const CoefficientTable& table = problem.coefficients;
  const detail::CellStencil stencil(shape);
  const double w = cell_weight(shape);
  std::vector<double> grad(shape.node_count(), 0.0);
  detail::for_each_cell(shape, [&](std::size_t base) {
    detail::CellEdges e;
    detail::CellEdges flux;
    stencil.load(u, base, e);
    for (int c = 0; c < 8; ++c) {
      const auto p = e.corner(c);
      const double f = w * table.flux_factor(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
      flux.add_to_corner(c, {f * p[0], f * p[1], f * p[2]});
    }
    stencil.scatter(grad, base, flux);
  });
  for (const GridCharge& q : problem.charges) grad[shape.flat(q.node)] -= q.strength;
  clear_boundary(shape, grad);
  return grad;
}

void hessian_apply(const DiscreteProblem& problem, std::span<const double> u, std::span<const double> v,
                   std::span<double> out) {
  require_size(problem, u.size());
  require_size(problem, v.size());
  require_size(problem, out.size());
  const GridShape& shape = problem.shape;
  const CoefficientTable& table = problem.coefficients;
  const detail::CellStencil stencil(shape);
  const double w = cell_weight(shape);

  std::vector<double> direction(v.begin(), v.end());
  clear_boundary(shape, direction);
  std::fill(out.begin(), out.end(), 0.0);
  const bool linear = table.order() == 1;
  detail::for_each_cell(shape, [&](std::size_t base) {
    detail::CellEdges e;
    detail::CellEdges d;
    detail::CellEdges acc;
    stencil.load(direction, base, d);
    if (linear) {
      for (auto* edges : {&d.ex, &d.ey, &d.ez}) {
        for (double& x : *edges) x *= 2.0 * w;
      }
      stencil.scatter(out, base, d);
      return;
    }
    stencil.load(u, base, e);
    for (int c = 0; c < 8; ++c) {
      const auto p = e.corner(c);
      const auto q = d.corner(c);
      const double s = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
      const double f = w * table.flux_factor(s);
      const double g = w * table.flux_slope(s) * (p[0] * q[0] + p[1] * q[1] + p[2] * q[2]);
      acc.add_to_corner(c, {f * q[0] + g * p[0], f * q[1] + g * p[1], f * q[2] + g * p[2]});
    }
    stencil.scatter(out, base, acc);
  });
  clear_boundary(shape, out);
}

std::vector<double> hessian_diagonal(const DiscreteProblem& problem, std::span<const double> u) {
  require_size(problem, u.size());
  const GridShape& shape = problem.shape;
  const CoefficientTable& table = problem.coefficients;
  const detail::CellStencil stencil(shape);
  const double w = cell_weight(shape);
  const double ih = stencil.inv_h();
  std::vector<double> diag(shape.node_count(), 0.0);
  detail::for_each_cell(shape, [&](std::size_t base) {
    detail::CellEdges e;
    stencil.load(u, base, e);
    for (int b = 0; b < 8; ++b) {
      const auto p = e.corner(b);
      const double s = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
      const double f = table.flux_factor(s);
      const double g = table.flux_slope(s);
      const int bx = b & 1, by = (b >> 1) & 1, bz = (b >> 2) & 1;
      for (int c = 0; c < 8; ++c) {
        const int cx = c & 1, cy = (c >> 1) & 1, cz = (c >> 2) & 1;
        const double ex = (cy == by && cz == bz) ? (cx ? ih : -ih) : 0.0;
        const double ey = (cx == bx && cz == bz) ? (cy ? ih : -ih) : 0.0;
        const double ez = (cx == bx && cy == by) ? (cz ? ih : -ih) : 0.0;
        const double pe = p[0] * ex + p[1] * ey + p[2] * ez;
        diag[base + stencil.offset(c)] += w * (f * (ex * ex + ey * ey + ez * ez) + g * pe * pe);
      }
    }
  });
  clear_boundary(shape, diag, 1.0);
  return diag;
}

double dirichlet_norm_sq(const GridShape& shape, std::span<const double> u) {
  if (u.size() != shape.node_count()) throw InvalidArgument("field vector does not match the lattice");
  const detail::CellStencil stencil(shape);
  CompensatedSum sum;
  detail::for_each_cell(shape, [&](std::size_t base) {
    detail::CellEdges e;
    stencil.load(u, base, e);
    double cell = 0.0;
    for (int c = 0; c < 8; ++c) {
      const auto p = e.corner(c);
      cell += p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    }
    sum += cell;
  });
  return cell_weight(shape) * sum.value();
}

}  // namespace bistat
