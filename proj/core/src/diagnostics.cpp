#include <algorithm>
#include <cmath>
#include <limits>

#include "bistat/energy.hpp"
#include "bistat/errors.hpp"
#include "bistat/field.hpp"
#include "bistat/profiles.hpp"

namespace bistat {
namespace {

void require_converged(const GridField& field, const char* what) {
  if (!field.converged) {
    throw InvalidArgument(std::string(what) + " needs a converged field (grad_norm = " + std::to_string(field.grad_norm) + ")");
  }
}

double distance(const std::array<double, 3>& p, const std::array<double, 3>& q) {
  return std::hypot(p[0] - q[0], p[1] - q[1], p[2] - q[2]);
}

}  // namespace

std::string_view to_string(ExtremumKind kind) {
  switch (kind) {
    case ExtremumKind::StrictMax:
      return "MAX";
    case ExtremumKind::StrictMin:
      return "MIN";
    case ExtremumKind::Neither:
      break;
  }
  return "NEITHER";
}

ComparisonReport compare_solutions(const GridField& f1, const GridField& f2) {
  const GridShape& s = f1.problem.shape;
  if (!(s == f2.problem.shape)) throw InvalidArgument("compare_solutions needs fields on the same lattice");
  if (f1.values.size() != s.node_count() || f2.values.size() != s.node_count()) {
    throw InvalidArgument("field values do not match their lattice");
  }
  const std::vector<double> rho1 = nodal_charges(f1.problem);
  const std::vector<double> rho2 = nodal_charges(f2.problem);
  for (std::size_t i = 0; i < rho1.size(); ++i) {
    if (rho2[i] > rho1[i]) {
      throw InvalidArgument("compare_solutions needs rho2 <= rho1 at every node; fails at node " + std::to_string(i));
    }
  }

  ComparisonReport report;
  report.max_excess = -std::numeric_limits<double>::infinity();
  report.boundary_gap = -std::numeric_limits<double>::infinity();
  for (std::size_t f = 0; f < s.node_count(); ++f) {
    const double diff = f2.values[f] - f1.values[f];
    if (diff > report.max_excess) {
      report.max_excess = diff;
      report.worst_node = f;
    }
    const NodeIndex idx = s.unflat(f);
    if (s.on_boundary(idx[0], idx[1], idx[2])) report.boundary_gap = std::max(report.boundary_gap, diff);
  }
  report.value = report.max_excess - report.boundary_gap;
  report.threshold = 10.0 * std::max(f1.tolerance, f2.tolerance);
  report.pass = report.value <= report.threshold;
  return report;
}

std::vector<ChargeExtremum> extremum_report(const GridField& field) {
  require_converged(field, "extremum_report");
  const GridShape& s = field.problem.shape;
  std::vector<ChargeExtremum> out;
  for (const GridCharge& q : field.problem.charges) {
    ChargeExtremum e;
    e.charge = q.source;
    e.strength = q.strength;
    e.node = q.node;
    e.expected = q.strength > 0.0 ? ExtremumKind::StrictMax : ExtremumKind::StrictMin;
    const double centre = field.values[s.flat(q.node)];
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (int dz = -1; dz <= 1; ++dz) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0 && dz == 0) continue;
          const double v = field.values[s.flat(q.node[0] + dx, q.node[1] + dy, q.node[2] + dz)];
          hi = std::max(hi, v);
          lo = std::min(lo, v);
        }
      }
    }
    if (centre > hi) {
      e.observed = ExtremumKind::StrictMax;
    } else if (centre < lo) {
      e.observed = ExtremumKind::StrictMin;
    }
    e.margin = e.expected == ExtremumKind::StrictMax ? centre - hi : lo - centre;
    e.matches = e.observed == e.expected;
    out.push_back(e);
  }
  return out;
}

double sample_trilinear(const GridShape& shape, std::span<const double> values, const std::array<double, 3>& x) {
  std::array<int, 3> base{};
  std::array<double, 3> frac{};
  for (int d = 0; d < 3; ++d) {
    const double t = (x[d] - shape.lo[d]) / shape.h;
    if (t < -1e-9 || t > shape.n[d] - 1 + 1e-9) throw InvalidArgument("sample point outside the lattice");
    base[d] = std::clamp(static_cast<int>(std::floor(t)), 0, shape.n[d] - 2);
    frac[d] = std::clamp(t - base[d], 0.0, 1.0);
  }
  double v = 0.0;
  for (int c = 0; c < 8; ++c) {
    const int bx = c & 1, by = (c >> 1) & 1, bz = (c >> 2) & 1;
    const double w = (bx ? frac[0] : 1.0 - frac[0]) * (by ? frac[1] : 1.0 - frac[1]) * (bz ? frac[2] : 1.0 - frac[2]);
    if (w != 0.0) v += w * values[shape.flat(base[0] + bx, base[1] + by, base[2] + bz)];
  }
  return v;
}

double near_light_threshold(double h) { return 1.0 - std::min(10.0 * h, 0.5); }

std::vector<SegmentReport> segment_report(const GridField& field) {
  require_converged(field, "segment_report");
  const GridShape& s = field.problem.shape;
  const auto& charges = field.problem.charges;
  std::vector<SegmentReport> out;
  for (std::size_t j = 0; j < charges.size(); ++j) {
    for (std::size_t l = j + 1; l < charges.size(); ++l) {
      const auto xj = s.position(charges[j].node);
      const auto xl = s.position(charges[l].node);
      SegmentReport r;
      r.j = charges[j].source;
      r.l = charges[l].source;
      r.distance = distance(xj, xl);
      r.same_sign = charges[j].strength * charges[l].strength > 0.0;
      const double uj = field.values[s.flat(charges[j].node)];
      const double ul = field.values[s.flat(charges[l].node)];
      const int samples = std::max(16, static_cast<int>(std::ceil(4.0 * r.distance / s.h)));
      for (int k = 0; k <= samples; ++k) {
        const double t = static_cast<double>(k) / samples;
        const std::array<double, 3> x{xj[0] + t * (xl[0] - xj[0]), xj[1] + t * (xl[1] - xj[1]), xj[2] + t * (xl[2] - xj[2])};
        const double chord = uj + t * (ul - uj);
        r.defect = std::max(r.defect, std::abs(sample_trilinear(s, field.values, x) - chord));
      }
      r.light_ratio = std::abs(uj - ul) / r.distance;
      r.threshold = near_light_threshold(s.h);
      r.near_light = r.light_ratio > r.threshold;
      out.push_back(r);
    }
  }
  return out;
}

GradientSup gradient_sup(const GridField& field, double min_distance) {
  const GridShape& s = field.problem.shape;
  std::vector<std::array<double, 3>> centres;
  for (const GridCharge& q : field.problem.charges) centres.push_back(s.position(q.node));
  const auto nx = static_cast<std::size_t>(s.n[0]);
  const auto nxy = nx * static_cast<std::size_t>(s.n[1]);
  GradientSup best;
  for_each_cell_gradient(s, field.values, [&](const CellGradient& cell) {
    const NodeIndex idx{static_cast<int>(cell.cell_base % nx), static_cast<int>((cell.cell_base / nx) % static_cast<std::size_t>(s.n[1])),
                        static_cast<int>(cell.cell_base / nxy)};
    auto c = s.position(idx);
    for (double& x : c) x += 0.5 * s.h;
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& p : centres) nearest = std::min(nearest, distance(c, p));
    if (nearest <= min_distance) return;
    if (cell.magnitude > best.value) {
      best.value = cell.magnitude;
      best.distance = nearest;
    }
  });
  return best;
}

BoxStudy box_doubling_study(const GridField& field, const SolverOptions& options) {
  const DiscreteProblem& inner = field.problem;
  const GridShape& s = inner.shape;
  std::array<int, 3> pad{};
  Box outer_box;
  for (int d = 0; d < 3; ++d) {
    const int steps = s.n[d] - 1;
    pad[d] = steps / 2;
    outer_box.lo[d] = s.lo[d] - s.h * pad[d];
    outer_box.hi[d] = s.lo[d] + s.h * (2 * steps - pad[d]);
  }
  const DiscreteProblem outer = inner.config ? assemble_problem(*inner.config, outer_box, s.h, inner.order, inner.boundary_rule)
                                             : assemble_problem(outer_box, s.h, inner.order);
  const GridField big = minimize_energy(outer, options);

  BoxStudy study;
  study.outer = outer.shape;
  study.converged = big.converged;
  for (std::size_t f = 0; f < s.node_count(); ++f) {
    const NodeIndex idx = s.unflat(f);
    const double u_big = big.values[outer.shape.flat(idx[0] + pad[0], idx[1] + pad[1], idx[2] + pad[2])];
    study.max_difference = std::max(study.max_difference, std::abs(field.values[f] - u_big));
    study.field_scale = std::max(study.field_scale, std::abs(u_big));
  }
  return study;
}

}  // namespace bistat
