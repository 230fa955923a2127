#pragma once

#include <string>
#include <vector>

#include "gsqg/solver.hpp"

namespace gsqg {

struct IterationTrace {
  /// Sample times t_k = k dt on [0, T].
  std::vector<double> times;
  /// decrements[n - 1][k] = D_n(t_k) = ||u^{n+1} - u^n||_inf + ||theta^{n+1} - theta^n||_{C^{r-1}}.
  std::vector<std::vector<double>> decrements;
  /// Last iterate at the sample times.
  std::vector<ScalarField> theta;
  std::vector<VectorField> u;
  /// Horizon of the iteration and the existence time of the data.
  double horizon = 0.0;
  double time_bound = 0.0;
  /// C psi0 / (1 - C t psi0) with C = c_existence, psi0 = ||u0||_inf + ||theta0||_{C^r}; inf past the pole.
  std::vector<double> norm_bound_curve;
  std::vector<std::string> warnings;
  /// ||u0||_inf + ||theta0||_{C^{r-1}}: the scale for "zero" decrements.
  double initial_scale = 0.0;

  /// D_n(T) for n = 1..n_max-1.
  std::vector<double> final_decrements() const;
  /// sup_t D_n(t).
  std::vector<double> sup_decrements() const;
  /// First n (1-based) from which the smoothed initial data no longer change,
  /// i.e. D_n(0) <= 1e-13 initial_scale; decrements.size() + 1 when that never happens.
  std::size_t saturation_index() const;
  /// Fitted ratio D_{n+1}(T) / D_n(T) over the saturated iterations above
  /// 1e-10 of the first saturated decrement.
  double contraction_ratio() const;
};

/// Appendix-B approximating sequence with frozen velocity per outer iteration:
/// theta^1 = S_2 theta0, u^1 = S_2 u0 (constant in time); theta^{n+1} is
/// transported by u^n from S_{n+2} theta0 with RK4 (midpoint velocities by
/// cubic interpolation in time); u^{n+1}(t) = S_{n+2} u0 + near(theta^{n+1}(t)
/// - theta^{n+1}(0)) - int_0^t far(theta^{n+1} u^n) by the trapezoid rule.
///
/// Horizon: config.t_end, capped at the existence time when
/// config.stop_at_existence_time is set. n_max >= 2.
IterationTrace picard_iterate(const SolverConfig& config, const ScalarField& theta0, const VectorField& u0,
                              std::size_t n_max);

/// Least-squares ratio exp(slope of log D_n) over the decrements above floor * max.
double fitted_decay_ratio(const std::vector<double>& d, double floor = 1e-12, std::size_t skip = 0);

}  // namespace gsqg
