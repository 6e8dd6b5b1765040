#pragma once

#include <cstddef>

namespace weylmech::numeric {

/// Uniform periodic position grid and its Fourier-conjugate momentum lattice.
///
/// Positions are x_i = x_min + i·dx, i = 0..n−1, with dx = (x_max − x_min)/n.
/// Momenta are p_k = (k − n/2)·dp, k = 0..n−1, with dp = 2π·hbar/(n·dx).
struct GridSpec {
  std::size_t n = 128;
  double x_min = -8.0;
  double x_max = 8.0;
  double hbar = 1.0;

  /// Throws GridError unless n ≥ 8 is a power of two, x_max > x_min and hbar > 0.
  void validate() const;

  [[nodiscard]] double length() const { return x_max - x_min; }
  [[nodiscard]] double dx() const { return length() / static_cast<double>(n); }
  [[nodiscard]] double dp() const;
  [[nodiscard]] double x(std::size_t i) const { return x_min + static_cast<double>(i) * dx(); }
  [[nodiscard]] double p(std::size_t k) const {
    return (static_cast<double>(k) - static_cast<double>(n / 2)) * dp();
  }
  /// Phase-space cell area dx·dp = 2πħ/n.
  [[nodiscard]] double cell() const { return dx() * dp(); }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Throws GridError when the two grids differ.
void require_same_grid(const GridSpec& a, const GridSpec& b);

}  // namespace weylmech::numeric
