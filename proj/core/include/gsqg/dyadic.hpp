#pragma once

#include <filesystem>

#include "gsqg/field.hpp"

namespace gsqg {

enum class BlockMode {
  inhomogeneous,  // Delta_j, j >= -1, Delta_{-1} = chi * f
  homogeneous,    // dot Delta_j = phi_j * f
  lowpass,        // S_n = chi_n * f, chi_n = chi + sum_{j <= n} phi_j
};

/// Littlewood-Paley profiles and the block range a grid can represent.
///
/// chi_hat(r) = 1 for r <= 0.625, 0 for r >= 0.8125, smooth in between, and
/// phi_hat(r) = chi_hat(r / 2) - chi_hat(r), supported in [0.625, 1.625].
/// The sum chi_hat + sum_{j<J} phi_hat(2^-j r) telescopes to chi_hat(2^-J r).
class DyadicFamily {
 public:
  static constexpr double inner_radius = 0.625;
  static constexpr double outer_radius = 0.8125;

  explicit DyadicFamily(const Grid2D& grid);

  static double chi_hat(double r);
  static double phi_hat(double r);

  const Grid2D& grid() const { return grid_; }
  /// Lowest block that sees a nonzero mode (homogeneous); the inhomogeneous range starts at -1.
  int j_min_homogeneous() const { return j_min_homogeneous_; }
  /// Largest j whose annulus lies inside the dealiased band.
  int j_max() const { return j_max_; }
  /// Smallest J with S_J = identity on the grid; blocks above it are zero.
  int j_top() const { return j_top_; }

  /// Symbol of the block multiplier at radius r.
  double symbol(int j, BlockMode mode, double r) const;

 private:
  Grid2D grid_;
  int j_min_homogeneous_ = 0;
  int j_max_ = 0;
  int j_top_ = 0;
};

/// Throws ConfigError when the dealiased band cannot hold a block j >= 0.
DyadicFamily build_partition(const Grid2D& grid);

/// Throws RangeError for j outside [-1, j_top] (inhomogeneous),
/// [j_min_homogeneous, j_top] (homogeneous) or j < -1 (lowpass).
ScalarField project_block(const ScalarField& f, const DyadicFamily& family, int j, BlockMode mode);

/// S_n f.
ScalarField smooth_truncate_initial(const ScalarField& f, const DyadicFamily& family, int n);

/// CSV rows (radius, chi_hat, phi_hat) on [0, r_max].
void export_profiles_csv(const std::filesystem::path& path, double r_max = 2.0, std::size_t samples = 401);

}  // namespace gsqg
