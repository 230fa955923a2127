#include "gsqg/profiles.hpp"

namespace gsqg {
namespace {

// psi(t) = exp(-1/t) for t > 0.
Jet psi(Jet t) {
  if (t.v <= 0.0) return {};
  return exp(-(Jet::constant(1.0) / t));
}

}  // namespace

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

Jet smooth_step(Jet t) {
  if (t.v <= 0.0) return {};
  if (t.v >= 1.0) return Jet::constant(1.0);
  const Jet a = psi(t);
  const Jet b = psi(Jet::constant(1.0) - t);
  return a / (a + b);
}

double plateau(double r, double inner, double outer) { return smooth_step((outer - r) / (outer - inner)); }

Jet plateau(Jet r, double inner, double outer) {
  return smooth_step((1.0 / (outer - inner)) * (Jet::constant(outer) - r));
}

}  // namespace gsqg
