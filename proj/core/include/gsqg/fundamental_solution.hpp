#pragma once

#include "gsqg/field.hpp"
#include "gsqg/report.hpp"

namespace gsqg {

/// Periodic Phi_beta * g with Phi_beta = scale * C_beta |x|^{-beta}, mean mode dropped.
///
/// Ewald split: C r^{-beta} Q(beta/2, eta r^2) is sampled on the grid (cell
/// averages near the origin, analytic origin cell) and transformed; the
/// remainder has transform rho^{beta-2} Q(1 - beta/2, rho^2 / (4 eta)) and is
/// applied exactly. eta = max(0.1, 160 / L^2) keeps the sampled part negligible
/// at |x| = L/2.
ScalarField fundamental_convolution(const ScalarField& g, double beta, double scale = 1.0);

/// ||(-Delta)^{1-beta/2}(Phi_beta * g) - (g - mean g)||_2 / ||g - mean g||_2.
double fundamental_solution_residual(const ScalarField& g, double beta, double scale = 1.0);

/// Centered Gaussian exp(-|x - c|^2 / (2 sigma^2)) on the grid.
ScalarField centered_gaussian(const Grid2D& grid, double sigma);

/// Residual for a Gaussian of width min(2, L/20) on grid and on its 2x and 4x
/// coarsenings. Pass iff the finest residual is <= 1e-2 and the sequence
/// strictly decreases with refinement.
VerificationReport verify_fundamental_solution(double beta, const Grid2D& grid);

}  // namespace gsqg
