#pragma once

#include <vector>

namespace gsqg {

/// Cumulative trapezoid integral of samples y over times t; out[0] = 0.
std::vector<double> cumulative_trapezoid(const std::vector<double>& t, const std::vector<double>& y);

/// alpha(t_k) exp(int_0^{t_k} beta): the Gronwall bound for u <= alpha + int beta u
/// with alpha nondecreasing. The integral is the trapezoid rule on the samples.
std::vector<double> gronwall_bound(const std::vector<double>& t, const std::vector<double>& alpha,
                                   const std::vector<double>& beta);

/// Discrete envelope y_n = alpha_n + sum_{k<n} w_k y_k. Any nonnegative u with
/// u_n <= alpha_n + sum_{k<n} w_k u_k satisfies u_n <= y_n.
std::vector<double> discrete_gronwall_envelope(const std::vector<double>& alpha, const std::vector<double>& w);

/// Smallest K >= 0 with N(t) <= N(0) exp(K I(t)) at every sample, I = int_0^t g.
/// Samples with I(t) = 0 must have N(t) <= N(0) (up to rel_tol) or K is +inf.
double minimal_gronwall_constant(const std::vector<double>& t, const std::vector<double>& N,
                                 const std::vector<double>& g, double rel_tol = 1e-12);

/// Smallest C with sup_{tau <= t} psi(tau) <= C psi0 / (1 - C t psi0) at every
/// sample: C = max_t psibar(t) / (psi0 (1 + t psibar(t))), psibar the running
/// maximum. Never below 1 since the bound must hold at t = 0.
double fit_rational_bound_constant(const std::vector<double>& t, const std::vector<double>& psi);

/// C psi0 / (1 - C t psi0); +inf at and past the pole.
double rational_bound(double C, double psi0, double t);

}  // namespace gsqg
