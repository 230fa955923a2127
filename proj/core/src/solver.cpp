#include "gsqg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "gsqg/dyadic.hpp"
#include "gsqg/error.hpp"
#include "gsqg/multipliers.hpp"
#include "gsqg/norms.hpp"
#include "gsqg/transport.hpp"
#include "gsqg/windows.hpp"

namespace gsqg {
namespace {

void check_finite(const ScalarField& theta, double threshold, double t) {
  const double m = theta.max_abs();
  if (!std::isfinite(m)) throw SimulationAbort("NaN in theta at t = " + std::to_string(t));
  if (threshold > 0.0 && m > 10.0 * threshold)
    throw SimulationAbort("blow-up: ||theta||_inf = " + std::to_string(m) + " at t = " + std::to_string(t));
}

double gradient_sup(const ScalarField& f) {
  const ScalarField a = derivative(f, 1, 0), b = derivative(f, 0, 1);
  double m = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) m = std::max(m, std::hypot(a.values()[i], b.values()[i]));
  return m;
}

}  // namespace

NormDescriptor NormDescriptor::parse(const std::string& text) {
  static const std::vector<std::string> plain{"theta_linf", "theta_l2", "theta_mean", "u_linf",
                                              "u_div",      "theta_w1inf", "u_c1"};
  static const std::vector<std::string> with_param{"theta_zygmund", "theta_holder", "theta_hs", "theta_hsul",
                                                   "u_hsul"};
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  NormDescriptor d{kind, 0.0};
  const bool needs = std::find(with_param.begin(), with_param.end(), kind) != with_param.end();
  if (!needs && std::find(plain.begin(), plain.end(), kind) == plain.end())
    throw ConfigError("unknown norm '" + text + "'");
  if (needs) {
    if (colon == std::string::npos) throw ConfigError("norm '" + kind + "' needs a parameter");
    try {
      d.parameter = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw ConfigError("bad norm parameter in '" + text + "'");
    }
  } else if (colon != std::string::npos) {
    throw ConfigError("norm '" + kind + "' takes no parameter");
  }
  return d;
}

std::string NormDescriptor::label() const {
  if (kind == "theta_zygmund" || kind == "theta_holder" || kind == "theta_hs" || kind == "theta_hsul" ||
      kind == "u_hsul") {
    char buf[32];
    std::snprintf(buf, sizeof buf, ":%g", parameter);
    return kind + buf;
  }
  return kind;
}

SimState SimState::initial(const ScalarField& theta0, const VectorField& u0) {
  return SimState{0.0, theta0, u0, VectorField::zeros(theta0.grid()), 0.0, std::nullopt};
}

SimState step_transport(const SimState& state, const VectorField& u_frozen, double dt, double threshold_linf) {
  SimState next = state;
  next.theta = rk4_transport_step(state.theta, state.t, dt, [&](double, const ScalarField&) { return u_frozen; });
  next.u = u_frozen;
  next.t = state.t + dt;
  check_finite(next.theta, threshold_linf, next.t);
  return next;
}

VectorField velocity_serfati(const SimState& state, const VectorField& u0, const ScalarField& theta0,
                             const KernelSplit& split) {
  if (std::abs(state.accumulator_time - state.t) > 1e-12 * std::max(1.0, std::abs(state.t)))
    throw StateError("far accumulator is at t = " + std::to_string(state.accumulator_time) + ", state at t = " +
                     std::to_string(state.t));
  if (state.t == 0.0) return u0;
  return u0 + convolve_near(split, state.theta - theta0) - state.far_accumulator;
}

double existence_time(double u0_linf, double theta0_cr, double c) {
  if (u0_linf < 0.0 || theta0_cr < 0.0 || !(c > 0.0)) throw DomainError("existence_time: negative input");
  if (u0_linf == 0.0 && theta0_cr == 0.0) return std::numeric_limits<double>::infinity();
  const double M = 2.0 * c * (theta0_cr + u0_linf);
  return std::numbers::ln2 / (c * M);
}

std::vector<double> Trajectory::series(const std::string& label) const {
  std::vector<double> s;
  for (const auto& n : norms)
    if (n.label == label) s.push_back(n.value);
  return s;
}

std::vector<double> Trajectory::sample_times() const {
  std::vector<double> t;
  for (const auto& n : norms)
    if (t.empty() || n.t != t.back()) t.push_back(n.t);
  return t;
}

double measure_norm(const NormDescriptor& d, const ScalarField& theta, const VectorField& u) {
  const std::string& k = d.kind;
  if (k == "theta_linf") return theta.max_abs();
  if (k == "theta_l2") return theta.l2_norm();
  if (k == "theta_mean") return theta.mean();
  if (k == "u_linf") return u.max_abs();
  if (k == "u_div") return divergence(u).max_abs();
  if (k == "theta_w1inf") return theta.max_abs() + gradient_sup(theta);
  if (k == "u_c1") {
    double g = 0.0;
    for (int i = 0; i < 2; ++i)
      for (const auto& c : {derivative(u[i], 1, 0), derivative(u[i], 0, 1)}) g = std::max(g, c.max_abs());
    return u.max_abs() + g;
  }
  if (k == "theta_zygmund") return zygmund_norm(theta, d.parameter, build_partition(theta.grid())).value;
  if (k == "theta_holder") return classical_holder_norm(theta, d.parameter).value;
  if (k == "theta_hs") return sobolev_norm(theta, d.parameter).value;
  if (k == "theta_hsul") {
    const WindowFamily w(theta.grid());
    return uniformly_local_norm(theta, d.parameter, w, LocalKind::sobolev).value;
  }
  if (k == "u_hsul") {
    const WindowFamily w(theta.grid());
    const double a = uniformly_local_norm(u[0], d.parameter, w, LocalKind::sobolev).value;
    const double b = uniformly_local_norm(u[1], d.parameter, w, LocalKind::sobolev).value;
    return std::hypot(a, b);
  }
  throw ConfigError("unknown norm '" + k + "'");
}

Simulation::Simulation(SolverConfig config, const ScalarField& theta0, const VectorField& u0)
    : config_(std::move(config)),
      theta0_(dealias(theta0)),
      u0_(u0),
      state_(SimState::initial(theta0_, u0)),
      threshold_(theta0_.max_abs()) {
  const Grid2D& g = theta0.grid();
  if (g.n_side() != config_.n_side || std::abs(g.box_length() - config_.L) > 1e-12 * config_.L)
    throw ConfigError("initial data grid does not match n_side / L");
  if (!(config_.beta > 0.0 && config_.beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
  if (!(config_.dt > 0.0)) throw ConfigError("dt must be positive");
  if (config_.constitutive == Constitutive::direct) {
    const VectorField given = biot_savart_velocity(theta0, config_.beta);
    const double scale = std::max(given.max_abs(), u0.max_abs());
    if (scale > 0.0 && (given - u0).max_abs() > 1e-6 * scale)
      throw ConfigError("u0 is not the Biot-Savart velocity of theta0");
    // the run starts from the dealiased pair
    const VectorField bs = biot_savart_velocity(theta0_, config_.beta);
    u0_ = bs;
    state_.u = bs;
  } else {
    u0_ = dealias(u0);
    state_.u = u0_;
  }
}

const KernelSplit& Simulation::split() const {
  if (!split_) split_ = std::make_unique<KernelSplit>(build_split(theta0_.grid(), config_.beta));
  return *split_;
}

void Simulation::step(double dt) {
  const double beta = config_.beta;
  SimState& s = state_;
  if (config_.constitutive == Constitutive::direct) {
    const ScalarField theta =
        rk4_transport_step(s.theta, s.t, dt, [beta](double, const ScalarField& th) { return biot_savart_velocity(th, beta); });
    const VectorField u = biot_savart_velocity(theta, beta);
    if (config_.accumulate_far) {
      if (!s.far_integrand) s.far_integrand = convolve_far(split(), s.theta, s.u);
      VectorField f1 = convolve_far(split(), theta, u);
      s.far_accumulator = s.far_accumulator + (f1 + *s.far_integrand).scaled(0.5 * dt);
      s.far_integrand = std::move(f1);
      s.accumulator_time = s.t + dt;
    }
    s.theta = theta;
    s.u = u;
    s.t += dt;
  } else {
    const KernelSplit& sp = split();
    auto velocity = [&](const ScalarField& th, const VectorField& acc) {
      return u0_ + convolve_near(sp, th - theta0_) - acc;
    };
    auto rhs = [&](const ScalarField& th, const VectorField& acc) {
      const VectorField u = velocity(th, acc);
      return std::pair{transport_rhs(th, u), convolve_far(sp, th, u)};
    };
    const auto [k1t, k1a] = rhs(s.theta, s.far_accumulator);
    const auto [k2t, k2a] = rhs(s.theta + (0.5 * dt) * k1t, s.far_accumulator + k1a.scaled(0.5 * dt));
    const auto [k3t, k3a] = rhs(s.theta + (0.5 * dt) * k2t, s.far_accumulator + k2a.scaled(0.5 * dt));
    const auto [k4t, k4a] = rhs(s.theta + dt * k3t, s.far_accumulator + k3a.scaled(dt));
    s.theta = s.theta + (dt / 6.0) * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
    s.far_accumulator = s.far_accumulator + (k1a + k2a.scaled(2.0) + k3a.scaled(2.0) + k4a).scaled(dt / 6.0);
    s.t += dt;
    s.accumulator_time = s.t;
    s.u = velocity(s.theta, s.far_accumulator);
  }
  check_finite(s.theta, threshold_, s.t);
}

Trajectory simulate(const SolverConfig& config, const ScalarField& theta0, const VectorField& u0) {
  Simulation sim(config, theta0, u0);
  Trajectory traj;

  const double u_linf = sim.u0().max_abs();
  const double theta_cr = zygmund_norm(sim.theta0(), config.r, build_partition(theta0.grid())).value;
  traj.existence_time = existence_time(u_linf, theta_cr, config.c_existence);
  const double t_final = config.stop_at_existence_time ? std::min(config.t_end, traj.existence_time) : config.t_end;

  double dt = config.dt;
  const double dt_cfl = cfl_step(theta0.grid(), u_linf);
  if (dt > dt_cfl) {
    traj.diagnostics.push_back("dt reduced from " + std::to_string(dt) + " to CFL step " + std::to_string(dt_cfl));
    dt = dt_cfl;
  }
  const std::size_t steps = t_final > 0.0 ? static_cast<std::size_t>(std::ceil(t_final / dt - 1e-9)) : 0;
  if (steps > 0) dt = t_final / static_cast<double>(steps);
  traj.dt_used = dt;
  const std::size_t every =
      config.sample_interval > 0.0 ? std::max<std::size_t>(1, std::llround(config.sample_interval / dt)) : 1;

  auto record = [&] {
    const SimState& s = sim.state();
    for (const auto& d : config.record_norms) traj.norms.push_back({s.t, d.label(), measure_norm(d, s.theta, s.u)});
    traj.times.push_back(s.t);
    if (config.store_fields) {
      traj.theta.push_back(s.theta);
      traj.u.push_back(s.u);
    }
  };
  record();
  for (std::size_t i = 1; i <= steps; ++i) {
    sim.step(dt);
    if (i % every == 0 || i == steps) record();
  }
  traj.t_reached = sim.state().t;
  return traj;
}

}  // namespace gsqg
