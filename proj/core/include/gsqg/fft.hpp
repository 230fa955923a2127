#pragma once

#include <complex>
#include <span>
#include <vector>

#include "gsqg/grid.hpp"

namespace gsqg {

using cplx = std::complex<double>;

/// Transform normalization used everywhere in this library:
///
///   c_k = (1 / N^2) sum_x f(x) exp(-i k.x),      f(x) = sum_k c_k exp(i k.x)
///
/// so a constant field c has c_0 = c, and Parseval reads
///   sum_x |f(x)|^2 h^2 = L^2 sum_k |c_k|^2.
/// Convolution with a kernel K on the torus multiplies c_k by K^(xi_k), the
/// continuous transform int K(x) exp(-i xi.x) dx.
std::vector<cplx> forward_transform(const Grid2D& grid, std::span<const double> values);
std::vector<cplx> forward_transform(const Grid2D& grid, std::span<const cplx> values);

/// Inverse transform; returns the real part.
std::vector<double> inverse_transform(const Grid2D& grid, std::span<const cplx> coefficients);

/// Inverse transform keeping the complex result.
std::vector<cplx> inverse_transform_complex(const Grid2D& grid, std::span<const cplx> coefficients);

}  // namespace gsqg
