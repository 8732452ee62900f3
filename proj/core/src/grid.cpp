#include "bistat/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bistat/errors.hpp"
#include "bistat/profiles.hpp"

namespace bistat {
namespace {

GridShape make_shape(const Box& box, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("grid spacing h must be positive");
  GridShape shape;
  shape.h = h;
  shape.lo = box.lo;
  for (int d = 0; d < 3; ++d) {
    const double edge = box.hi[d] - box.lo[d];
    if (!(edge > 0.0)) throw InvalidArgument("box must have hi > lo on every axis");
    const double steps = edge / h;
    const double rounded = std::round(steps);
    if (std::abs(steps - rounded) > 1e-9 * std::max(1.0, steps)) {
      std::ostringstream msg;
      msg << "h = " << h << " does not divide box edge " << edge << " on axis " << d;
      throw InvalidArgument(msg.str());
    }
    if (rounded < 2.0) throw InvalidArgument("box needs at least one interior node per axis");
    shape.n[d] = static_cast<int>(rounded) + 1;
  }
  return shape;
}

void fill_superposition(DiscreteProblem& problem) {
  const GridShape& shape = problem.shape;
  std::vector<std::size_t> boundary;
  for (std::size_t f = 0; f < shape.node_count(); ++f) {
    const NodeIndex idx = shape.unflat(f);
    if (shape.on_boundary(idx[0], idx[1], idx[2])) boundary.push_back(f);
  }

  for (const GridCharge& q : problem.charges) {
    const auto centre = shape.position(q.node);
    std::vector<double> radii(boundary.size());
    for (std::size_t b = 0; b < boundary.size(); ++b) {
      const auto x = shape.position(shape.unflat(boundary[b]));
      radii[b] = std::hypot(x[0] - centre[0], x[1] - centre[1], x[2] - centre[2]);
    }
    std::vector<double> sorted = radii;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const RadialProfile profile = exact_radial_profile(q.strength, 3, sorted);
    for (std::size_t b = 0; b < boundary.size(); ++b) {
      const auto it = std::lower_bound(sorted.begin(), sorted.end(), radii[b]);
      problem.dirichlet[boundary[b]] += profile.samples[static_cast<std::size_t>(it - sorted.begin())].u;
    }
  }
}

}  // namespace

std::string_view to_string(BoundaryRule rule) {
  return rule == BoundaryRule::Zero ? "zero" : "radial-superposition";
}

DiscreteProblem assemble_problem(const Box& box, double h, int m) {
  DiscreteProblem problem;
  problem.shape = make_shape(box, h);
  problem.order = m;
  problem.coefficients = taylor_coefficients(m);
  problem.boundary_rule = BoundaryRule::Zero;
  problem.dirichlet.assign(problem.shape.node_count(), 0.0);
  return problem;
}

DiscreteProblem assemble_problem(const ChargeConfig& config, const Box& box, double h, int m, BoundaryRule rule) {
  if (config.dim() != 3) throw InvalidArgument("grid solves are restricted to N = 3");
  DiscreteProblem problem = assemble_problem(box, h, m);
  problem.boundary_rule = rule;
  problem.config = config;
  const GridShape& shape = problem.shape;

  const double spacing = config.min_distance();
  const double clearance = config.size() >= 2 ? 2.0 * spacing : kMinStepsBetweenCharges * h;
  for (std::size_t k = 0; k < config.size(); ++k) {
    const auto& x = config[k].position;
    GridCharge q;
    q.source = k;
    q.strength = config[k].strength;
    double snap2 = 0.0;
    for (int d = 0; d < 3; ++d) {
      const double to_lo = x[d] - box.lo[d];
      const double to_hi = box.hi[d] - x[d];
      if (!(to_lo > 0.0) || !(to_hi > 0.0)) {
        throw InvalidArgument("charge " + std::to_string(k) + " lies on or outside the box boundary");
      }
      if (std::min(to_lo, to_hi) < clearance * (1.0 - 1e-12)) {
        std::ostringstream msg;
        msg << "charge " << k << " has clearance " << std::min(to_lo, to_hi) << " to the box boundary; need " << clearance;
        throw InvalidArgument(msg.str());
      }
      q.node[d] = static_cast<int>(std::lround(to_lo / h));
      const double offset = x[d] - (box.lo[d] + h * q.node[d]);
      snap2 += offset * offset;
    }
    if (shape.on_boundary(q.node[0], q.node[1], q.node[2])) {
      throw InvalidArgument("charge " + std::to_string(k) + " snaps onto the box boundary");
    }
    q.snap_distance = std::sqrt(snap2);
    problem.charges.push_back(q);
  }

  for (std::size_t j = 0; j < problem.charges.size(); ++j) {
    for (std::size_t l = j + 1; l < problem.charges.size(); ++l) {
      const auto p = shape.position(problem.charges[j].node);
      const auto q = shape.position(problem.charges[l].node);
      const double d = std::hypot(p[0] - q[0], p[1] - q[1], p[2] - q[2]);
      if (d < kMinStepsBetweenCharges * h * (1.0 - 1e-12)) {
        std::ostringstream msg;
        msg << "h = " << h << " is too coarse: charges " << j << " and " << l << " are " << d / h
            << " grid steps apart (need " << kMinStepsBetweenCharges << ")";
        throw InvalidArgument(msg.str());
      }
    }
  }

  if (rule == BoundaryRule::RadialSuperposition) {
    fill_superposition(problem);
    double bound = 0.0;
    for (const auto& q : config.charges()) bound += std::sqrt(std::abs(q.strength));
    bound *= shape_constant_A(3);
    for (double v : problem.dirichlet) {
      if (std::abs(v) > bound * (1.0 + 1e-12)) throw InvalidArgument("boundary data exceed the single-charge bound");
    }
  }
  return problem;
}

}  // namespace bistat
