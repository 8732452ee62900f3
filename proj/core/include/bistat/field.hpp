#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bistat/grid.hpp"

namespace bistat {

/// Discrete minimizer of the order-m energy together with solver diagnostics.
struct GridField {
  DiscreteProblem problem;
  std::vector<double> values;  ///< full lattice, boundary entries = Dirichlet data
  double energy = 0.0;
  double initial_energy = 0.0;  ///< energy of the starting guess
  double grad_norm = 0.0;       ///< max_i |dI/du_i| over interior nodes
  int iterations = 0;           ///< Newton steps taken
  int cg_iterations = 0;        ///< total inner conjugate-gradient steps
  bool converged = false;
  double tolerance = 0.0;
};

struct SolverOptions {
  double tol = 1e-9;
  int max_iter = 200;
  int max_cg_iter = 1000;
};

/// Newton-CG with Armijo backtracking, starting from the Dirichlet data
/// extended by zero. Never throws on non-convergence; inspect `converged`.
GridField minimize_energy(const DiscreteProblem& problem, const SolverOptions& options = {});
GridField minimize_energy(const DiscreteProblem& problem, double tol, int max_iter);

/// Same, from a caller-supplied initial guess (boundary entries are replaced
/// by the Dirichlet data).
GridField minimize_energy(const DiscreteProblem& problem, std::vector<double> initial, const SolverOptions& options);

/// Initial guess: Dirichlet data plus uniform noise of the given amplitude on
/// interior nodes, drawn from mt19937_64(seed).
std::vector<double> perturbed_initial_guess(const DiscreteProblem& problem, std::uint64_t seed, double amplitude);

/// Nodal charge vector: a_k accumulated at the snapped charge nodes.
std::vector<double> nodal_charges(const DiscreteProblem& problem);

struct ComparisonReport {
  double max_excess = 0.0;     ///< max over nodes of u2 - u1
  double boundary_gap = 0.0;   ///< sup over boundary nodes of phi2 - phi1
  double value = 0.0;          ///< max_excess - boundary_gap
  double threshold = 0.0;      ///< 10 * max(tol1, tol2)
  std::size_t worst_node = 0;
  bool pass = false;
};

/// Comparison check for rho2 <= rho1: u2 <= u1 + sup_boundary(phi2 - phi1).
/// Throws InvalidArgument on a lattice mismatch or when rho2 <= rho1 fails
/// at some node.
ComparisonReport compare_solutions(const GridField& f1, const GridField& f2);

enum class ExtremumKind { StrictMax, StrictMin, Neither };
std::string_view to_string(ExtremumKind kind);

struct ChargeExtremum {
  std::size_t charge = 0;
  double strength = 0.0;
  NodeIndex node{};
  ExtremumKind observed = ExtremumKind::Neither;
  ExtremumKind expected = ExtremumKind::Neither;  ///< StrictMax for a > 0, StrictMin for a < 0
  double margin = 0.0;  ///< signed gap to the 26 neighbours in the expected direction
  bool matches = false;
};

/// Classifies every charge node against its 26 neighbours. Throws
/// InvalidArgument for a non-converged field.
std::vector<ChargeExtremum> extremum_report(const GridField& field);

struct SegmentReport {
  std::size_t j = 0;
  std::size_t l = 0;
  double distance = 0.0;
  double defect = 0.0;       ///< max |u - chord| along the segment
  double light_ratio = 0.0;  ///< |u(x_j) - u(x_l)| / |x_j - x_l|
  double threshold = 0.0;    ///< light_ratio above this is flagged
  bool near_light = false;
  bool same_sign = false;
};

/// Trilinear value of a lattice function at a point inside the box.
double sample_trilinear(const GridShape& shape, std::span<const double> values, const std::array<double, 3>& x);

/// Light-segment indicator 1 - min(10 h, 1/2).
double near_light_threshold(double h);

/// Linearity defect and light-ray ratio along every charge pair. Throws
/// InvalidArgument for a non-converged field.
std::vector<SegmentReport> segment_report(const GridField& field);

/// Truncation check: the same charges, order and boundary rule on a box whose
/// edges are twice as long (same h, same centre up to one lattice step).
struct BoxStudy {
  GridShape outer;
  double max_difference = 0.0;  ///< max over the original nodes of |u - u_outer|
  double field_scale = 0.0;     ///< max |u_outer| over the same nodes
  bool converged = false;       ///< the outer solve converged
};

BoxStudy box_doubling_study(const GridField& field, const SolverOptions& options = {});

struct GradientSup {
  double value = 0.0;
  double distance = 0.0;  ///< cell-centre distance to the nearest charge at the maximiser
};

/// Largest corner-gradient magnitude over cells whose centre lies farther than
/// min_distance from every charge.
GradientSup gradient_sup(const GridField& field, double min_distance = 0.0);

}  // namespace bistat
