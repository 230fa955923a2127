#pragma once

#include <array>
#include <vector>

#include "gsqg/field.hpp"
#include "gsqg/profiles.hpp"
#include "gsqg/radial.hpp"

namespace gsqg {

/// C_beta = Gamma(beta/2) / (2^{2-beta} pi Gamma(1 - beta/2)), so that
/// Phi_beta = C_beta |x|^{-beta} has Fourier transform |xi|^{beta-2}.
double c_beta(double beta);

/// a(r): 1 on B_1, 0 outside B_2, smooth and decreasing in between.
double cutoff_a(double r);
Jet cutoff_a(Jet r);

/// How the kernel transforms are obtained.
enum class KernelRealization {
  spectral,  // exact continuous transforms of the split kernels (default)
  sampled,   // h^2 * FFT of the grid samples
};

/// Near kernel grad_perp(a Phi) and far kernel grad grad_perp((1 - a) Phi),
/// with their transforms cached for convolution.
///
/// far(x)[i][j] = d_j (grad_perp_i (1 - a) Phi)(x); convolve_far contracts j
/// against (theta u)_j.
class KernelSplit {
 public:
  KernelSplit(const Grid2D& grid, double beta, KernelRealization realization = KernelRealization::spectral);

  const Grid2D& grid() const { return grid_; }
  double beta() const { return beta_; }
  double c() const { return c_; }
  KernelRealization realization() const { return realization_; }

  /// (a Phi)'(r) and ((1 - a) Phi)', ((1 - a) Phi)''.
  double near_radial(double r) const;
  std::array<double, 2> far_radial(double r) const;

  /// Pointwise analytic kernels (zero at the origin for near).
  std::array<double, 2> near_at(double x, double y) const;
  std::array<std::array<double, 2>, 2> far_at(double x, double y) const;

  /// Grid samplings on [-L/2, L/2)^2, wrapped; far truncated at |x| >= L/2.
  VectorField near_samples() const;
  std::array<std::array<ScalarField, 2>, 2> far_samples() const;

  /// Transform of the near kernel: i xi_perp A(|xi|).
  std::array<cplx, 2> near_symbol(std::size_t k) const { return near_symbol_[k]; }
  std::array<std::array<cplx, 2>, 2> far_symbol(std::size_t k) const { return far_symbol_[k]; }

  /// A(rho) = FT of a Phi (radial).
  double near_profile_transform(double rho) const { return near_table_(rho); }

  /// Quadrature L^1 norm of the near kernel at the grid spacing.
  double near_l1() const;
  /// Analytic bound on the L^1 mass of the far kernel beyond |x| = L/2.
  double far_tail_bound() const;

 private:
  Grid2D grid_;
  double beta_;
  double c_;
  KernelRealization realization_;
  RadialTable near_table_;
  std::vector<std::array<cplx, 2>> near_symbol_;
  std::vector<std::array<std::array<cplx, 2>, 2>> far_symbol_;
};

/// Throws ConfigError unless spacing <= 1/8 and L >= 16; DomainError for beta outside (0, 1).
KernelSplit build_split(const Grid2D& grid, double beta, KernelRealization realization = KernelRealization::spectral);

/// grad_perp(a Phi) * theta.
VectorField convolve_near(const KernelSplit& split, const ScalarField& theta);

/// Component i: sum_j far_ij * (theta u_j), products dealiased.
VectorField convolve_far(const KernelSplit& split, const ScalarField& theta, const VectorField& u);

/// grad_perp((1 - a) Phi) * theta from the grid samples of grad_perp((1 - a) Phi),
/// truncated at |x| = L/2. Independent of the split's realization.
VectorField convolve_far_velocity_sampled(const KernelSplit& split, const ScalarField& theta);

/// Quadrature of int |grad_perp(a Phi)| over the grid cells of spacing h:
/// analytic origin cell, Gauss-Legendre on cells near the origin, midpoint elsewhere.
double near_l1_quadrature(double beta, double h);

}  // namespace gsqg
