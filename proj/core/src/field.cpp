#include "gsqg/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsqg {
namespace {

void require_same_grid(const Grid2D& a, const Grid2D& b) {
  if (!(a == b)) throw std::invalid_argument("field operation on mismatched grids");
}

void symmetrize(const Grid2D& grid, std::vector<cplx>& c) {
  const std::size_t n = grid.n_side();
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    const std::size_t j2 = conjugate_index(i2, n);
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      const std::size_t k = grid.index(i1, i2), j = grid.index(conjugate_index(i1, n), j2);
      if (j < k) continue;
      const cplx a = 0.5 * (c[k] + std::conj(c[j]));
      c[k] = a;
      c[j] = std::conj(a);
    }
  }
}

}  // namespace

ScalarField ScalarField::from_values(const Grid2D& grid, std::vector<double> values) {
  if (values.size() != grid.size()) throw std::invalid_argument("ScalarField: sample count mismatch");
  // exactly conjugate symmetric by construction
  auto coefficients = forward_transform(grid, std::span<const double>(values));
  return ScalarField(grid, std::move(values), std::move(coefficients));
}

ScalarField ScalarField::from_coefficients(const Grid2D& grid, std::vector<cplx> coefficients) {
  if (coefficients.size() != grid.size()) throw std::invalid_argument("ScalarField: coefficient count mismatch");
  symmetrize(grid, coefficients);
  auto values = inverse_transform(grid, coefficients);
  return ScalarField(grid, std::move(values), std::move(coefficients));
}

ScalarField ScalarField::zeros(const Grid2D& grid) {
  return ScalarField(grid, std::vector<double>(grid.size(), 0.0), std::vector<cplx>(grid.size()));
}

ScalarField ScalarField::constant(const Grid2D& grid, double value) {
  std::vector<cplx> c(grid.size());
  c[0] = value;
  return ScalarField(grid, std::vector<double>(grid.size(), value), std::move(c));
}

ScalarField ScalarField::sample(const Grid2D& grid, const std::function<double(double, double)>& f) {
  const std::size_t n = grid.n_side();
  std::vector<double> v(grid.size());
  for (std::size_t i2 = 0; i2 < n; ++i2)
    for (std::size_t i1 = 0; i1 < n; ++i1) v[grid.index(i1, i2)] = f(grid.coordinate(i1), grid.coordinate(i2));
  return from_values(grid, std::move(v));
}

double ScalarField::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double ScalarField::l2_norm() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return std::sqrt(s * grid_.cell_area());
}

ScalarField ScalarField::operator+(const ScalarField& other) const {
  require_same_grid(grid_, other.grid_);
  std::vector<double> v(values_.size());
  std::vector<cplx> c(coefficients_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = values_[i] + other.values_[i];
    c[i] = coefficients_[i] + other.coefficients_[i];
  }
  return ScalarField(grid_, std::move(v), std::move(c));
}

ScalarField ScalarField::operator-(const ScalarField& other) const { return *this + other.scaled(-1.0); }

ScalarField ScalarField::scaled(double factor) const {
  std::vector<double> v(values_);
  std::vector<cplx> c(coefficients_);
  for (auto& x : v) x *= factor;
  for (auto& x : c) x *= factor;
  return ScalarField(grid_, std::move(v), std::move(c));
}

ScalarField ScalarField::pointwise(const ScalarField& other) const {
  require_same_grid(grid_, other.grid_);
  std::vector<double> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * other.values_[i];
  return from_values(grid_, std::move(v));
}

double VectorField::max_abs() const {
  const auto a = components[0].values();
  const auto b = components[1].values();
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::hypot(a[i], b[i]));
  return m;
}

double VectorField::l2_norm() const { return std::hypot(components[0].l2_norm(), components[1].l2_norm()); }

ScalarField dealias(const ScalarField& f) {
  const Grid2D& g = f.grid();
  const std::size_t n = g.n_side();
  const long limit = g.dealias_mode_limit();
  std::vector<cplx> c(f.coefficients().begin(), f.coefficients().end());
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    const bool cut2 = std::abs(g.mode(i2)) > limit;
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      if (cut2 || std::abs(g.mode(i1)) > limit) c[g.index(i1, i2)] = 0.0;
    }
  }
  return ScalarField::from_coefficients(g, std::move(c));
}

VectorField dealias(const VectorField& v) { return {dealias(v[0]), dealias(v[1])}; }

ScalarField apply_symbol(const ScalarField& f, const std::function<cplx(double, double)>& symbol) {
  const Grid2D& g = f.grid();
  const std::size_t n = g.n_side();
  std::vector<cplx> c(f.coefficients().begin(), f.coefficients().end());
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    const double xi2 = g.wavenumber(i2);
    for (std::size_t i1 = 0; i1 < n; ++i1) c[g.index(i1, i2)] *= symbol(g.wavenumber(i1), xi2);
  }
  return ScalarField::from_coefficients(g, std::move(c));
}

ScalarField apply_radial_symbol(const ScalarField& f, const std::function<double(double)>& symbol) {
  return apply_symbol(f, [&](double a, double b) { return cplx(symbol(std::hypot(a, b))); });
}

}  // namespace gsqg
