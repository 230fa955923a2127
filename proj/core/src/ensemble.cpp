#include "gsqg/ensemble.hpp"

#include <cmath>
#include <numbers>

#include "gsqg/error.hpp"

namespace gsqg {
namespace {

double unit_uniform(std::uint64_t h) { return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53; }

std::uint64_t mix(std::uint64_t seed, long a, long b, std::uint64_t salt = 0) {
  std::uint64_t h = splitmix64(seed ^ 0x6a09e667f3bcc909ull);
  h = splitmix64(h ^ static_cast<std::uint64_t>(a));
  h = splitmix64(h ^ static_cast<std::uint64_t>(b));
  return splitmix64(h ^ salt);
}

// Box-Muller pair from two hashed uniforms.
cplx hashed_gaussian(std::uint64_t seed, long m1, long m2) {
  const double u1 = unit_uniform(mix(seed, m1, m2, 1));
  const double u2 = unit_uniform(mix(seed, m1, m2, 2));
  const double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * std::numbers::pi * u2), r * std::sin(2.0 * std::numbers::pi * u2)};
}

}  // namespace

FieldClass parse_field_class(const std::string& text) {
  if (text == "band_limited") return FieldClass::band_limited;
  if (text == "compact_bump") return FieldClass::compact_bump;
  if (text == "radial") return FieldClass::radial;
  if (text == "constant_plus_bump") return FieldClass::constant_plus_bump;
  throw ConfigError("unknown field class '" + text + "'");
}

std::string to_string(FieldClass c) {
  switch (c) {
    case FieldClass::band_limited: return "band_limited";
    case FieldClass::compact_bump: return "compact_bump";
    case FieldClass::radial: return "radial";
    case FieldClass::constant_plus_bump: return "constant_plus_bump";
  }
  return "band_limited";
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

ScalarField random_band_limited(const Grid2D& grid, std::uint64_t seed, double slope, long max_mode) {
  const long limit = grid.dealias_mode_limit();
  if (max_mode <= 0) max_mode = limit;
  if (max_mode > limit) throw ConfigError("band exceeds the dealiased band of the grid");
  const std::size_t n = grid.n_side();
  std::vector<cplx> c(grid.size());
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      const long m1 = grid.mode(i1), m2 = grid.mode(i2);
      if ((m1 == 0 && m2 == 0) || std::abs(m1) > max_mode || std::abs(m2) > max_mode) continue;
      // the coefficient of -m is the conjugate; hash the representative with the positive leading index
      const bool flip = m2 < 0 || (m2 == 0 && m1 < 0);
      const cplx z = flip ? std::conj(hashed_gaussian(seed, -m1, -m2)) : hashed_gaussian(seed, m1, m2);
      c[grid.index(i1, i2)] = z * std::pow(std::hypot(double(m1), double(m2)), -slope);
    }
  }
  ScalarField f = ScalarField::from_coefficients(grid, std::move(c));
  const double m = f.max_abs();
  return m > 0.0 ? f.scaled(1.0 / m) : f;
}

ScalarField compact_bump(const Grid2D& grid, double cx, double cy, double radius, double amplitude) {
  return ScalarField::sample(grid, [=](double x, double y) {
    const double q = ((x - cx) * (x - cx) + (y - cy) * (y - cy)) / (radius * radius);
    if (q >= 1.0) return 0.0;
    return amplitude * std::exp(1.0 - 1.0 / (1.0 - q));
  });
}

ScalarField random_compact_bump(const Grid2D& grid, std::uint64_t seed) {
  const double c = grid.box_length() / 2.0;
  ScalarField f = compact_bump(grid, c, c, 2.0, 1.0);
  for (long k = 0; k < 3; ++k) {
    const double a = 2.0 * std::numbers::pi * unit_uniform(mix(seed, k, 0));
    const double d = 2.0 * unit_uniform(mix(seed, k, 1));
    const double radius = 1.0 + unit_uniform(mix(seed, k, 2));
    const double amp = 2.0 * unit_uniform(mix(seed, k, 3)) - 1.0;
    f = f + compact_bump(grid, c + d * std::cos(a), c + d * std::sin(a), radius, amp);
  }
  return f;
}

ScalarField radial_gaussian(const Grid2D& grid, double sigma, double amplitude) {
  const double c = grid.box_length() / 2.0;
  return ScalarField::sample(grid, [=](double x, double y) {
    return amplitude * std::exp(-((x - c) * (x - c) + (y - c) * (y - c)) / (2.0 * sigma * sigma));
  });
}

ScalarField ensemble_member(const Grid2D& grid, const EnsembleSpec& spec, std::size_t index) {
  const std::uint64_t seed = splitmix64(spec.seed + 0x9e37ull * index);
  switch (spec.field_class) {
    case FieldClass::band_limited: return random_band_limited(grid, seed, spec.spectral_slope, spec.max_mode);
    case FieldClass::compact_bump: return random_compact_bump(grid, seed);
    case FieldClass::radial: {
      const double sigma = 0.1 * grid.box_length() * (0.05 + 0.05 * unit_uniform(seed));
      return radial_gaussian(grid, sigma, 2.0 * unit_uniform(splitmix64(seed)) - 1.0);
    }
    case FieldClass::constant_plus_bump: {
      const double level = 2.0 * unit_uniform(seed) - 1.0;
      return ScalarField::constant(grid, level) + random_compact_bump(grid, seed);
    }
  }
  throw ConfigError("unknown field class");
}

}  // namespace gsqg
