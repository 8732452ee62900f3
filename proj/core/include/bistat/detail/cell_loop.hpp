#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>

#include "bistat/grid.hpp"

namespace bistat::detail {

// Corner c of a cell has bits (bx, by, bz) = (c & 1, (c >> 1) & 1, (c >> 2) & 1).
// Edge slots: ex[by + 2 bz], ey[bx + 2 bz], ez[bx + 2 by].
struct CellEdges {
  std::array<double, 4> ex{};
  std::array<double, 4> ey{};
  std::array<double, 4> ez{};

  std::array<double, 3> corner(int c) const noexcept {
    const int bx = c & 1;
    const int by = (c >> 1) & 1;
    const int bz = (c >> 2) & 1;
    return {ex[by + 2 * bz], ey[bx + 2 * bz], ez[bx + 2 * by]};
  }

  void add_to_corner(int c, const std::array<double, 3>& g) noexcept {
    const int bx = c & 1;
    const int by = (c >> 1) & 1;
    const int bz = (c >> 2) & 1;
    ex[by + 2 * bz] += g[0];
    ey[bx + 2 * bz] += g[1];
    ez[bx + 2 * by] += g[2];
  }
};

class CellStencil {
 public:
  explicit CellStencil(const GridShape& shape) : inv_h_(1.0 / shape.h) {
    const auto sx = static_cast<std::ptrdiff_t>(1);
    const auto sy = static_cast<std::ptrdiff_t>(shape.n[0]);
    const auto sz = static_cast<std::ptrdiff_t>(shape.n[0]) * shape.n[1];
    for (int c = 0; c < 8; ++c) offset_[c] = (c & 1) * sx + ((c >> 1) & 1) * sy + ((c >> 2) & 1) * sz;
  }

  std::ptrdiff_t offset(int c) const noexcept { return offset_[c]; }

  void load(std::span<const double> u, std::size_t base, CellEdges& e) const noexcept {
    std::array<double, 8> v;
    for (int c = 0; c < 8; ++c) v[c] = u[base + offset_[c]];
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        // x-edge at (by, bz) = (a, b); y-edge at (bx, bz) = (a, b); z-edge at (bx, by) = (a, b)
        e.ex[a + 2 * b] = (v[1 | (a << 1) | (b << 2)] - v[(a << 1) | (b << 2)]) * inv_h_;
        e.ey[a + 2 * b] = (v[a | 2 | (b << 2)] - v[a | (b << 2)]) * inv_h_;
        e.ez[a + 2 * b] = (v[a | (b << 1) | 4] - v[a | (b << 1)]) * inv_h_;
      }
    }
  }

  /// Adds the transpose of the edge-difference map applied to edge weights.
  void scatter(std::span<double> out, std::size_t base, const CellEdges& w) const noexcept {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const double gx = w.ex[a + 2 * b] * inv_h_;
        out[base + offset_[1 | (a << 1) | (b << 2)]] += gx;
        out[base + offset_[(a << 1) | (b << 2)]] -= gx;
        const double gy = w.ey[a + 2 * b] * inv_h_;
        out[base + offset_[a | 2 | (b << 2)]] += gy;
        out[base + offset_[a | (b << 2)]] -= gy;
        const double gz = w.ez[a + 2 * b] * inv_h_;
        out[base + offset_[a | (b << 1) | 4]] += gz;
        out[base + offset_[a | (b << 1)]] -= gz;
      }
    }
  }

  double inv_h() const noexcept { return inv_h_; }

 private:
  double inv_h_;
  std::array<std::ptrdiff_t, 8> offset_{};
};

template <class F>
void for_each_cell(const GridShape& shape, F&& f) {
  for (int k = 0; k + 1 < shape.n[2]; ++k) {
    for (int j = 0; j + 1 < shape.n[1]; ++j) {
      std::size_t base = shape.flat(0, j, k);
      for (int i = 0; i + 1 < shape.n[0]; ++i, ++base) f(base);
    }
  }
}

}  // namespace bistat::detail
