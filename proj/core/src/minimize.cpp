#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "bistat/detail/poisson_preconditioner.hpp"
#include "bistat/energy.hpp"
#include "bistat/errors.hpp"
#include "bistat/field.hpp"

namespace bistat {
namespace {

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Preconditioner: S H0^{-1} S with S = sqrt(diag(H0) / diag(H)), so the
// Poisson solve sees the local stiffness of the nonlinear terms.
class NewtonPreconditioner {
 public:
  explicit NewtonPreconditioner(const GridShape& shape) : poisson_(shape), scale_(shape.node_count(), 1.0), tmp_(shape.node_count()) {}

  void update(const DiscreteProblem& problem, std::span<const double> u) {
    if (problem.order == 1) return;
    const std::vector<double> diag = hessian_diagonal(problem, u);
    const double base = 6.0 * problem.shape.h;
    for (std::size_t i = 0; i < diag.size(); ++i) scale_[i] = std::sqrt(base / diag[i]);
  }

  void apply(std::span<const double> r, std::span<double> out) {
    for (std::size_t i = 0; i < r.size(); ++i) tmp_[i] = r[i] * scale_[i];
    poisson_.apply(tmp_, out);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= scale_[i];
  }

 private:
  detail::PoissonPreconditioner poisson_;
  std::vector<double> scale_;
  std::vector<double> tmp_;
};

// Approximately solves H d = -g by preconditioned CG; returns the iteration count.
int newton_direction(const DiscreteProblem& problem, std::span<const double> u, std::span<const double> g,
                     NewtonPreconditioner& precond, double rel_tol, int max_iter, std::vector<double>& d) {
  const std::size_t n = g.size();
  std::vector<double> r(g.begin(), g.end());
  for (double& x : r) x = -x;
  std::vector<double> z(n);
  std::vector<double> p(n);
  std::vector<double> hp(n);
  d.assign(n, 0.0);
  precond.apply(r, z);
  p = z;
  double rz = dot(r, z);
  const double target = rel_tol * std::sqrt(dot(r, r));
  int it = 0;
  for (; it < max_iter; ++it) {
    if (std::sqrt(dot(r, r)) <= target) break;
    hessian_apply(problem, u, p, hp);
    const double curvature = dot(p, hp);
    if (!(curvature > 0.0)) break;
    const double alpha = rz / curvature;
    for (std::size_t i = 0; i < n; ++i) {
      d[i] += alpha * p[i];
      r[i] -= alpha * hp[i];
    }
    precond.apply(r, z);
    const double rz_next = dot(r, z);
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  // CG stopped before its first step: fall back to the preconditioned gradient.
  if (it == 0 || max_abs(d) == 0.0) d = z;
  return it;
}

}  // namespace

std::vector<double> nodal_charges(const DiscreteProblem& problem) {
  std::vector<double> rho(problem.shape.node_count(), 0.0);
  for (const GridCharge& q : problem.charges) rho[problem.shape.flat(q.node)] += q.strength;
  return rho;
}

std::vector<double> perturbed_initial_guess(const DiscreteProblem& problem, std::uint64_t seed, double amplitude) {
  std::vector<double> u = problem.dirichlet;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-amplitude, amplitude);
  const GridShape& s = problem.shape;
  for (int k = 1; k + 1 < s.n[2]; ++k) {
    for (int j = 1; j + 1 < s.n[1]; ++j) {
      for (int i = 1; i + 1 < s.n[0]; ++i) u[s.flat(i, j, k)] += noise(rng);
    }
  }
  return u;
}

GridField minimize_energy(const DiscreteProblem& problem, std::vector<double> initial, const SolverOptions& options) {
  const GridShape& shape = problem.shape;
  if (initial.size() != shape.node_count()) throw InvalidArgument("initial guess does not match the lattice");
  if (!(options.tol > 0.0)) throw InvalidArgument("solver tolerance must be positive");
  if (options.max_iter < 0) throw InvalidArgument("max_iter must be non-negative");
  for (std::size_t f = 0; f < shape.node_count(); ++f) {
    const NodeIndex idx = shape.unflat(f);
    if (shape.on_boundary(idx[0], idx[1], idx[2])) initial[f] = problem.dirichlet[f];
  }

  GridField field;
  field.problem = problem;
  field.tolerance = options.tol;
  field.values = std::move(initial);
  field.initial_energy = discrete_energy(problem, field.values);
  field.energy = field.initial_energy;

  std::vector<double> grad = energy_gradient(problem, field.values);
  field.grad_norm = max_abs(grad);
  NewtonPreconditioner precond(shape);
  std::vector<double> direction;
  std::vector<double> trial(field.values.size());
  constexpr double kArmijo = 1e-4;
  constexpr double kEps = std::numeric_limits<double>::epsilon();

  while (field.grad_norm > options.tol && field.iterations < options.max_iter) {
    precond.update(problem, field.values);
    const double eta = std::min(0.1, std::sqrt(std::sqrt(dot(grad, grad))));
    field.cg_iterations += newton_direction(problem, field.values, grad, precond, eta, options.max_cg_iter, direction);
    double slope = dot(grad, direction);
    if (!(slope < 0.0)) {
      // Inexact direction failed to descend; use steepest descent.
      direction.assign(grad.begin(), grad.end());
      for (double& x : direction) x = -x;
      slope = dot(grad, direction);
    }

    double step = 1.0;
    bool accepted = false;
    std::vector<double> trial_grad;
    for (int ls = 0; ls < 60; ++ls, step *= 0.5) {
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] = field.values[i] + step * direction[i];
      const double e = discrete_energy(problem, trial);
      if (!std::isfinite(e)) continue;
      const double noise = 64.0 * kEps * (std::abs(field.energy) + std::abs(e) + 1.0);
      if (e <= field.energy + kArmijo * step * slope) {
        trial_grad.clear();
        accepted = true;
      } else if (e <= field.energy + noise) {
        // Energy differences are lost in rounding; fall back to the residual.
        trial_grad = energy_gradient(problem, trial);
        accepted = max_abs(trial_grad) < field.grad_norm;
      }
      if (accepted) {
        field.energy = e;
        break;
      }
    }
    ++field.iterations;
    if (!accepted) break;
    field.values.swap(trial);
    grad = trial_grad.empty() ? energy_gradient(problem, field.values) : std::move(trial_grad);
    field.grad_norm = max_abs(grad);
  }
  field.converged = field.grad_norm <= options.tol;
  return field;
}

GridField minimize_energy(const DiscreteProblem& problem, const SolverOptions& options) {
  return minimize_energy(problem, problem.dirichlet, options);
}

GridField minimize_energy(const DiscreteProblem& problem, double tol, int max_iter) {
  SolverOptions options;
  options.tol = tol;
  options.max_iter = max_iter;
  return minimize_energy(problem, options);
}

}  // namespace bistat
