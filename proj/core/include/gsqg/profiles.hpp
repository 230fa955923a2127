#pragma once

#include <cmath>

namespace gsqg {

/// Value plus first and second derivative in one variable. Enough to
/// differentiate radial profiles twice without finite differences.
struct Jet {
  double v = 0.0;
  double d = 0.0;
  double dd = 0.0;

  static Jet variable(double x) { return {x, 1.0, 0.0}; }
  static Jet constant(double c) { return {c, 0.0, 0.0}; }
};

inline Jet operator+(Jet a, Jet b) { return {a.v + b.v, a.d + b.d, a.dd + b.dd}; }
inline Jet operator-(Jet a, Jet b) { return {a.v - b.v, a.d - b.d, a.dd - b.dd}; }
inline Jet operator-(Jet a) { return {-a.v, -a.d, -a.dd}; }
inline Jet operator*(double c, Jet a) { return {c * a.v, c * a.d, c * a.dd}; }
inline Jet operator*(Jet a, Jet b) { return {a.v * b.v, a.d * b.v + a.v * b.d, a.dd * b.v + 2.0 * a.d * b.d + a.v * b.dd}; }
inline Jet operator/(Jet a, Jet b) {
  const double q = a.v / b.v;
  const double qd = (a.d - q * b.d) / b.v;
  const double qdd = (a.dd - 2.0 * qd * b.d - q * b.dd) / b.v;
  return {q, qd, qdd};
}
/// Chain rule for g(a) given g, g', g'' at a.v.
inline Jet compose(Jet a, double g, double g1, double g2) { return {g, g1 * a.d, g2 * a.d * a.d + g1 * a.dd}; }
inline Jet exp(Jet a) {
  const double e = std::exp(a.v);
  return compose(a, e, e, e);
}
inline Jet pow(Jet a, double p) {
  const double f = std::pow(a.v, p);
  return compose(a, f, p * f / a.v, p * (p - 1.0) * f / (a.v * a.v));
}

/// C-infinity transition: 0 for t <= 0, 1 for t >= 1, built from exp(-1/t).
double smooth_step(double t);
Jet smooth_step(Jet t);

/// Radial plateau: 1 for r <= inner, 0 for r >= outer, monotone in between.
double plateau(double r, double inner, double outer);
Jet plateau(Jet r, double inner, double outer);

}  // namespace gsqg
