#pragma once

#include <array>
#include <vector>

#include "gsqg/norms.hpp"

namespace gsqg {

/// Translates of phi(|x - c| / scale), phi = 1 on B_1 and 0 outside B_2, over a
/// square lattice of centers with spacing L / ceil(L / scale).
class WindowFamily {
 public:
  WindowFamily(const Grid2D& grid, double scale = 1.0);

  double scale() const { return scale_; }
  const Grid2D& grid() const { return grid_; }
  const std::vector<std::array<double, 2>>& centers() const { return centers_; }

  static double profile(double r) ;
  double weight(std::size_t center, double x, double y) const;
  /// Largest distance from a torus point to its nearest center.
  double covering_radius() const;

 private:
  Grid2D grid_;
  double scale_;
  std::vector<std::array<double, 2>> centers_;
};

enum class LocalKind { sobolev, homogeneous_sobolev, lebesgue, slobodeckij };

/// sup over centers of ||phi_x f|| in the chosen space. For Sobolev kinds the
/// windowed field is moved to a zero-padded box (same spacing, side >= 8 scale)
/// so the result is the whole-plane norm of phi_x f. Slobodeckij refuses grids
/// with more than 128 points per side.
NormReport uniformly_local_norm(const ScalarField& f, double s_or_p, const WindowFamily& windows, LocalKind kind);

/// W^{s,2} norm of a compactly supported field given on a padded box:
/// sqrt(||g||^2 + ||nabla^m g||^2) + Slobodeckij seminorm of nabla^m g.
double slobodeckij_norm(const ScalarField& g, double s);

/// Bracket [lo, hi] for W^{s,2} / H^s implied by the symbol comparison.
std::array<double, 2> slobodeckij_sobolev_bracket(double s);

/// The windowed field phi_c f on a padded box centered at the window.
ScalarField extract_window(const ScalarField& f, const WindowFamily& windows, std::size_t center);

}  // namespace gsqg
