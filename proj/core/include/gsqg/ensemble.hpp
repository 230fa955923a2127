#pragma once

#include <cstdint>
#include <string>

#include "gsqg/field.hpp"

namespace gsqg {

enum class FieldClass { band_limited, compact_bump, radial, constant_plus_bump };

FieldClass parse_field_class(const std::string& text);
std::string to_string(FieldClass c);

struct EnsembleSpec {
  std::size_t count = 16;
  std::uint64_t seed = 1;
  FieldClass field_class = FieldClass::band_limited;
  /// Amplitude exponent gamma of the |k|^{-gamma} coefficient spectrum.
  double spectral_slope = 2.5;
  /// Largest integer mode |m|_inf of band-limited members; 0 means the dealiased band.
  long max_mode = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Complex Gaussian coefficients times |m|^{-slope} on 0 < |m|_inf <= max_mode,
/// normalized to sup norm 1. Each coefficient is a hash of (seed, m1, m2), so
/// grids that resolve the band carry the same field.
ScalarField random_band_limited(const Grid2D& grid, std::uint64_t seed, double slope = 2.5, long max_mode = 0);

/// amplitude * exp(1 - 1 / (1 - |x - c|^2 / radius^2)) inside the disk, 0 outside.
ScalarField compact_bump(const Grid2D& grid, double cx, double cy, double radius, double amplitude = 1.0);

/// Three bumps with hashed centers (within radius 2 of the box center), radii in
/// [1, 2] and amplitudes in [-1, 1], plus the leading bump of amplitude 1.
ScalarField random_compact_bump(const Grid2D& grid, std::uint64_t seed);

/// Gaussian of width sigma centered in the box.
ScalarField radial_gaussian(const Grid2D& grid, double sigma, double amplitude = 1.0);

/// Member `index` of the ensemble.
ScalarField ensemble_member(const Grid2D& grid, const EnsembleSpec& spec, std::size_t index);

}  // namespace gsqg
