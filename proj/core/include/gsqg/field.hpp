#pragma once

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "gsqg/fft.hpp"
#include "gsqg/grid.hpp"

namespace gsqg {

/// Real scalar field on a periodic grid, carrying both its samples and its
/// Fourier coefficients (normalization documented in fft.hpp).
///
/// Fields are immutable values: every operation returns a new field. The
/// coefficients are kept conjugate-symmetric so the samples are real.
class ScalarField {
 public:
  static ScalarField from_values(const Grid2D& grid, std::vector<double> values);
  /// Projects onto the conjugate-symmetric (real-field) subspace before use.
  static ScalarField from_coefficients(const Grid2D& grid, std::vector<cplx> coefficients);
  static ScalarField zeros(const Grid2D& grid);
  static ScalarField constant(const Grid2D& grid, double value);
  /// Samples f(x, y) at the grid points.
  static ScalarField sample(const Grid2D& grid, const std::function<double(double, double)>& f);

  const Grid2D& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  std::span<const cplx> coefficients() const { return coefficients_; }
  double value(std::size_t i1, std::size_t i2) const { return values_[grid_.index(i1, i2)]; }
  cplx coefficient(std::size_t i1, std::size_t i2) const { return coefficients_[grid_.index(i1, i2)]; }

  double max_abs() const;
  /// (sum f^2 h^2)^(1/2)
  double l2_norm() const;
  double mean() const { return coefficients_[0].real(); }

  ScalarField operator+(const ScalarField& other) const;
  ScalarField operator-(const ScalarField& other) const;
  ScalarField operator-() const { return scaled(-1.0); }
  ScalarField scaled(double factor) const;
  /// Pointwise product of samples, no dealiasing.
  ScalarField pointwise(const ScalarField& other) const;

 private:
  ScalarField(Grid2D grid, std::vector<double> values, std::vector<cplx> coefficients)
      : grid_(grid), values_(std::move(values)), coefficients_(std::move(coefficients)) {}

  Grid2D grid_;
  std::vector<double> values_;
  std::vector<cplx> coefficients_;
};

inline ScalarField operator*(double factor, const ScalarField& f) { return f.scaled(factor); }

/// Two-component field (velocities, gradients, kernel rows).
struct VectorField {
  std::array<ScalarField, 2> components;

  VectorField(ScalarField x, ScalarField y) : components{std::move(x), std::move(y)} {}
  static VectorField zeros(const Grid2D& grid) { return {ScalarField::zeros(grid), ScalarField::zeros(grid)}; }
  static VectorField constant(const Grid2D& grid, double cx, double cy) {
    return {ScalarField::constant(grid, cx), ScalarField::constant(grid, cy)};
  }

  const ScalarField& operator[](std::size_t i) const { return components[i]; }
  const Grid2D& grid() const { return components[0].grid(); }

  /// sup_x |v(x)| with the Euclidean norm of the vector.
  double max_abs() const;
  /// (sum |v|^2 h^2)^(1/2)
  double l2_norm() const;

  VectorField operator+(const VectorField& o) const { return {components[0] + o[0], components[1] + o[1]}; }
  VectorField operator-(const VectorField& o) const { return {components[0] - o[0], components[1] - o[1]}; }
  VectorField scaled(double factor) const { return {components[0].scaled(factor), components[1].scaled(factor)}; }
};

/// Zeroes every coefficient with max(|m1|, |m2|) above (2/3) of the Nyquist index.
ScalarField dealias(const ScalarField& f);
VectorField dealias(const VectorField& v);

/// Multiplies coefficient k by symbol(xi_1, xi_2). The result is projected
/// back onto real fields, so an odd symbol loses its Nyquist row/column.
ScalarField apply_symbol(const ScalarField& f, const std::function<cplx(double, double)>& symbol);
/// Same for a real radial symbol g(|xi|).
ScalarField apply_radial_symbol(const ScalarField& f, const std::function<double(double)>& symbol);

/// Spectral index of -k for index k.
inline std::size_t conjugate_index(std::size_t i, std::size_t n) { return (n - i) % n; }

}  // namespace gsqg
