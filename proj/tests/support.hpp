#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "gsqg/field.hpp"

namespace gsqg::testing {

// Random real field with Gaussian coefficients on |m| <= band, decaying like |m|^-2.
inline ScalarField random_field(const Grid2D& grid, unsigned seed, long band = -1) {
  const std::size_t n = grid.n_side();
  if (band < 0) band = grid.dealias_mode_limit();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<cplx> c(grid.size());
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      const long m1 = grid.mode(i1), m2 = grid.mode(i2);
      if (std::abs(m1) > band || std::abs(m2) > band) continue;
      const double amp = std::pow(1.0 + double(m1 * m1 + m2 * m2), -1.0);
      c[grid.index(i1, i2)] = amp * cplx(normal(rng), normal(rng));
    }
  }
  return ScalarField::from_coefficients(grid, std::move(c));
}

inline double max_diff(const ScalarField& a, const ScalarField& b) { return (a - b).max_abs(); }

}  // namespace gsqg::testing
