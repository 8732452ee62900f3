#include "bistat/detail/poisson_preconditioner.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <vector>

namespace bistat::detail {

struct PoissonPreconditioner::Impl {
  GridShape shape;
  std::array<int, 3> m{};  // interior points per axis
  double* work = nullptr;
  fftw_plan plan = nullptr;
  std::vector<double> inv_eigen;

  explicit Impl(const GridShape& s) : shape(s) {
    for (int d = 0; d < 3; ++d) m[d] = s.n[d] - 2;
    const std::size_t count = static_cast<std::size_t>(m[0]) * m[1] * m[2];
    work = fftw_alloc_real(count);
    // FFTW wants row-major dims; our x index is fastest, so reverse the axes.
    plan = fftw_plan_r2r_3d(m[2], m[1], m[0], work, work, FFTW_RODFT00, FFTW_RODFT00, FFTW_RODFT00, FFTW_ESTIMATE);

    std::array<std::vector<double>, 3> lambda;
    for (int d = 0; d < 3; ++d) {
      lambda[d].resize(static_cast<std::size_t>(m[d]));
      for (int a = 0; a < m[d]; ++a) {
        lambda[d][a] = 2.0 * (1.0 - std::cos(std::numbers::pi * (a + 1) / (m[d] + 1)));
      }
    }
    // Two unnormalised DST-I passes multiply by prod 2(M + 1).
    const double norm = 8.0 * (m[0] + 1.0) * (m[1] + 1.0) * (m[2] + 1.0);
    inv_eigen.resize(count);
    std::size_t f = 0;
    for (int k = 0; k < m[2]; ++k) {
      for (int j = 0; j < m[1]; ++j) {
        for (int i = 0; i < m[0]; ++i, ++f) {
          inv_eigen[f] = 1.0 / (s.h * (lambda[0][i] + lambda[1][j] + lambda[2][k]) * norm);
        }
      }
    }
  }

  ~Impl() {
    if (plan) fftw_destroy_plan(plan);
    if (work) fftw_free(work);
  }
};

PoissonPreconditioner::PoissonPreconditioner(const GridShape& shape) : impl_(std::make_unique<Impl>(shape)) {}
PoissonPreconditioner::~PoissonPreconditioner() = default;

void PoissonPreconditioner::apply(std::span<const double> r, std::span<double> out) {
  Impl& p = *impl_;
  const GridShape& s = p.shape;
  std::size_t f = 0;
  for (int k = 1; k + 1 < s.n[2]; ++k) {
    for (int j = 1; j + 1 < s.n[1]; ++j) {
      for (int i = 1; i + 1 < s.n[0]; ++i) p.work[f++] = r[s.flat(i, j, k)];
    }
  }
  fftw_execute(p.plan);
  for (std::size_t q = 0; q < p.inv_eigen.size(); ++q) p.work[q] *= p.inv_eigen[q];
  fftw_execute(p.plan);
  std::fill(out.begin(), out.end(), 0.0);
  f = 0;
  for (int k = 1; k + 1 < s.n[2]; ++k) {
    for (int j = 1; j + 1 < s.n[1]; ++j) {
      for (int i = 1; i + 1 < s.n[0]; ++i) out[s.flat(i, j, k)] = p.work[f++];
    }
  }
}

}  // namespace bistat::detail
