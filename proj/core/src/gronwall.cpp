#include "gsqg/gronwall.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gsqg/error.hpp"

namespace gsqg {

std::vector<double> cumulative_trapezoid(const std::vector<double>& t, const std::vector<double>& y) {
  if (t.size() != y.size()) throw ConfigError("cumulative_trapezoid: size mismatch");
  std::vector<double> out(t.size(), 0.0);
  for (std::size_t k = 1; k < t.size(); ++k) out[k] = out[k - 1] + 0.5 * (t[k] - t[k - 1]) * (y[k] + y[k - 1]);
  return out;
}

std::vector<double> gronwall_bound(const std::vector<double>& t, const std::vector<double>& alpha,
                                   const std::vector<double>& beta) {
  if (alpha.size() != t.size()) throw ConfigError("gronwall_bound: size mismatch");
  const auto I = cumulative_trapezoid(t, beta);
  std::vector<double> out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) out[k] = alpha[k] * std::exp(I[k]);
  return out;
}

std::vector<double> discrete_gronwall_envelope(const std::vector<double>& alpha, const std::vector<double>& w) {
  if (w.size() + 1 < alpha.size()) throw ConfigError("discrete_gronwall_envelope: too few weights");
  std::vector<double> y(alpha.size());
  double acc = 0.0;
  for (std::size_t n = 0; n < alpha.size(); ++n) {
    y[n] = alpha[n] + acc;
    if (n < w.size()) acc += w[n] * y[n];
  }
  return y;
}

double minimal_gronwall_constant(const std::vector<double>& t, const std::vector<double>& N,
                                 const std::vector<double>& g, double rel_tol) {
  if (t.size() != N.size()) throw ConfigError("minimal_gronwall_constant: size mismatch");
  if (t.empty()) return 0.0;
  const auto I = cumulative_trapezoid(t, g);
  const double N0 = N.front();
  double K = 0.0;
  for (std::size_t k = 1; k < t.size(); ++k) {
    if (N[k] <= N0 * (1.0 + rel_tol)) continue;
    if (!(I[k] > 0.0) || !(N0 > 0.0)) return std::numeric_limits<double>::infinity();
    K = std::max(K, std::log(N[k] / N0) / I[k]);
  }
  return K;
}

double fit_rational_bound_constant(const std::vector<double>& t, const std::vector<double>& psi) {
  if (t.size() != psi.size() || t.empty()) throw ConfigError("fit_rational_bound_constant: size mismatch");
  const double psi0 = psi.front();
  if (!(psi0 > 0.0)) throw DomainError("fit_rational_bound_constant: psi(0) must be positive");
  double C = 1.0, running = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    running = std::max(running, psi[k]);
    C = std::max(C, running / (psi0 * (1.0 + t[k] * running)));
  }
  return C;
}

double rational_bound(double C, double psi0, double t) {
  const double den = 1.0 - C * t * psi0;
  return den > 0.0 ? C * psi0 / den : std::numeric_limits<double>::infinity();
}

}  // namespace gsqg
