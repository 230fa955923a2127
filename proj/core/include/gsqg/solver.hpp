#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsqg/field.hpp"
#include "gsqg/kernels.hpp"

namespace gsqg {

enum class Constitutive { direct, serfati };

/// A recorded norm, written "kind" or "kind:parameter".
///
/// theta_linf, theta_l2, theta_mean, u_linf, u_div, theta_w1inf (||theta||_inf +
/// ||grad theta||_inf), u_c1 (||u||_inf + ||grad u||_inf), theta_zygmund:r,
/// theta_holder:r, theta_hs:s, theta_hsul:s, u_hsul:s.
struct NormDescriptor {
  std::string kind;
  double parameter = 0.0;

  static NormDescriptor parse(const std::string& text);
  std::string label() const;
};

struct SolverConfig {
  double beta = 0.5;
  /// Zygmund regularity used for ||theta||_{C^r} in the existence time.
  double r = 1.5;
  double dt = 1e-3;
  double t_end = 1.0;
  Constitutive constitutive = Constitutive::direct;
  std::size_t n_side = 256;
  double L = 6.283185307179586;
  std::vector<NormDescriptor> record_norms;
  /// C of the existence-time formula.
  double c_existence = 1.0;
  /// Stop at min(t_end, existence_time). Off for runs whose horizon is set by the experiment.
  bool stop_at_existence_time = true;
  /// Norm and snapshot cadence in time; 0 records every step.
  double sample_interval = 0.0;
  bool store_fields = false;
  /// Direct mode: also accumulate the far-field integral so velocity_serfati can be evaluated.
  bool accumulate_far = false;
};

struct SimState {
  double t = 0.0;
  ScalarField theta;
  VectorField u;
  /// int_0^t grad grad_perp((1 - a) Phi) *. (theta u) dtau
  VectorField far_accumulator;
  /// Time through which far_accumulator is current.
  double accumulator_time = 0.0;
  /// Far integrand at t (trapezoid bookkeeping).
  std::optional<VectorField> far_integrand;

  static SimState initial(const ScalarField& theta0, const VectorField& u0);
};

/// One RK4 step with a frozen, time-independent velocity.
/// Throws SimulationAbort on NaN or ||theta||_inf > 10 threshold_linf.
SimState step_transport(const SimState& state, const VectorField& u_frozen, double dt, double threshold_linf);

/// u0 + convolve_near(theta(t) - theta0) - far_accumulator.
/// Throws StateError unless the accumulator is current through state.t.
VectorField velocity_serfati(const SimState& state, const VectorField& u0, const ScalarField& theta0,
                             const KernelSplit& split);

/// T = ln 2 / (c M), M = 2 c (theta0_cr + u0_linf); +inf when both norms vanish.
double existence_time(double u0_linf, double theta0_cr, double c);

struct NormSample {
  double t;
  std::string label;
  double value;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<ScalarField> theta;
  std::vector<VectorField> u;
  std::vector<NormSample> norms;
  double t_reached = 0.0;
  double dt_used = 0.0;
  double existence_time = 0.0;
  std::vector<std::string> diagnostics;

  /// Time series of one recorded norm.
  std::vector<double> series(const std::string& label) const;
  std::vector<double> sample_times() const;
};

double measure_norm(const NormDescriptor& d, const ScalarField& theta, const VectorField& u);

/// Self-consistent time stepping.
///
/// direct: u = biot_savart_velocity(theta) at every RK stage, far integral
/// accumulated by trapezoid at step boundaries when requested.
/// serfati: (theta, far_accumulator) advanced together by RK4 with
/// u = u0 + near(theta - theta0) - far_accumulator at every stage.
class Simulation {
 public:
  /// theta0 is dealiased before use. Throws ConfigError when the grid does not
  /// match the config or, in direct mode, when u0 differs from the
  /// Biot-Savart velocity of theta0 by more than 1e-6 relative.
  Simulation(SolverConfig config, const ScalarField& theta0, const VectorField& u0);

  const SolverConfig& config() const { return config_; }
  const SimState& state() const { return state_; }
  const ScalarField& theta0() const { return theta0_; }
  const VectorField& u0() const { return u0_; }
  /// Split used for near/far convolutions (built on demand).
  const KernelSplit& split() const;

  void step(double dt);
  VectorField serfati_velocity() const { return velocity_serfati(state_, u0_, theta0_, split()); }

 private:
  SolverConfig config_;
  ScalarField theta0_;
  VectorField u0_;
  SimState state_;
  double threshold_;
  mutable std::unique_ptr<KernelSplit> split_;
};

/// Runs to min(t_end, T) (or t_end when the cap is off), recording norms at
/// the sample cadence. dt is reduced to the CFL step when it violates it, and
/// rounded so the run lands on the final time.
Trajectory simulate(const SolverConfig& config, const ScalarField& theta0, const VectorField& u0);

}  // namespace gsqg
