#pragma once

#include <cstddef>
#include <numbers>

namespace gsqg {

/// Square periodic grid on [0, L)^2 with n_side samples per dimension.
///
/// Sample (i1, i2) sits at x = (i1 h, i2 h), stored row-major at i2 * n + i1.
/// Spectral index i maps to the signed integer wavenumber m = i for i < n/2 and
/// i - n otherwise, so the Nyquist index n/2 carries m = -n/2. The physical
/// wavenumber is 2 pi m / L.
class Grid2D {
 public:
  explicit Grid2D(std::size_t n_side, double box_length = 2.0 * std::numbers::pi);

  std::size_t n_side() const { return n_; }
  std::size_t size() const { return n_ * n_; }
  double box_length() const { return length_; }
  double spacing() const { return length_ / static_cast<double>(n_); }
  double cell_area() const { return spacing() * spacing(); }
  double fundamental_wavenumber() const { return 2.0 * std::numbers::pi / length_; }

  std::size_t index(std::size_t i1, std::size_t i2) const { return i2 * n_ + i1; }

  /// Signed integer wavenumber for spectral index i.
  long mode(std::size_t i) const {
    return i < n_ / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(n_);
  }
  double wavenumber(std::size_t i) const { return fundamental_wavenumber() * static_cast<double>(mode(i)); }

  /// Signed offset of sample i from the origin on [-L/2, L/2).
  double centered_coordinate(std::size_t i) const { return spacing() * static_cast<double>(mode(i)); }
  double coordinate(std::size_t i) const { return spacing() * static_cast<double>(i); }

  /// Largest retained |m| under the 2/3 rule (strictly: |m| <= n/3).
  long dealias_mode_limit() const { return static_cast<long>(n_) / 3; }
  double dealias_wavenumber() const { return fundamental_wavenumber() * static_cast<double>(n_) / 3.0; }
  /// Largest |xi| present on the grid (the Nyquist corner).
  double max_wavenumber() const;

  bool operator==(const Grid2D& other) const = default;

 private:
  std::size_t n_;
  double length_;
};

}  // namespace gsqg
