#include "gsqg/picard.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gsqg/dyadic.hpp"
#include "gsqg/error.hpp"
#include "gsqg/kernels.hpp"
#include "gsqg/norms.hpp"
#include "gsqg/transport.hpp"

namespace gsqg {
namespace {

VectorField lowpass(const VectorField& u, const DyadicFamily& f, int n) {
  return {smooth_truncate_initial(u[0], f, n), smooth_truncate_initial(u[1], f, n)};
}

// Lagrange interpolation of uniformly spaced samples at fractional index s.
VectorField sample_at(const std::vector<VectorField>& u, double s) {
  const std::size_t m = u.size();
  const double nearest = std::round(s);
  if (std::abs(s - nearest) < 1e-12) return u[static_cast<std::size_t>(nearest)];
  const std::size_t width = std::min<std::size_t>(4, m);
  const long base = static_cast<long>(std::floor(s)) - 1;
  const std::size_t first = static_cast<std::size_t>(std::clamp<long>(base, 0, static_cast<long>(m - width)));
  VectorField out = VectorField::zeros(u[0].grid());
  for (std::size_t i = first; i < first + width; ++i) {
    double w = 1.0;
    for (std::size_t j = first; j < first + width; ++j)
      if (j != i) w *= (s - double(j)) / (double(i) - double(j));
    out = out + u[i].scaled(w);
  }
  return out;
}

}  // namespace

std::vector<double> IterationTrace::final_decrements() const {
  std::vector<double> d;
  for (const auto& row : decrements) d.push_back(row.back());
  return d;
}

std::vector<double> IterationTrace::sup_decrements() const {
  std::vector<double> d;
  for (const auto& row : decrements) d.push_back(*std::max_element(row.begin(), row.end()));
  return d;
}

std::size_t IterationTrace::saturation_index() const {
  for (std::size_t i = 0; i < decrements.size(); ++i)
    if (decrements[i].front() <= 1e-13 * initial_scale) return i + 1;
  return decrements.size() + 1;
}

double IterationTrace::contraction_ratio() const {
  const std::size_t first = saturation_index() - 1;
  if (first >= decrements.size()) return fitted_decay_ratio(final_decrements(), 1e-10);
  const auto d = final_decrements();
  const std::vector<double> tail(d.begin() + static_cast<long>(first), d.end());
  return fitted_decay_ratio(tail, 1e-10);
}

IterationTrace picard_iterate(const SolverConfig& config, const ScalarField& theta0_in, const VectorField& u0_in,
                              std::size_t n_max) {
  if (n_max < 2) throw ConfigError("picard_iterate: n_max must be at least 2");
  const Grid2D& grid = theta0_in.grid();
  if (grid.n_side() != config.n_side || std::abs(grid.box_length() - config.L) > 1e-12 * config.L)
    throw ConfigError("initial data grid does not match n_side / L");
  if (!(config.dt > 0.0)) throw ConfigError("dt must be positive");

  const ScalarField theta0 = dealias(theta0_in);
  const VectorField u0 = dealias(u0_in);
  const DyadicFamily family = build_partition(grid);
  const KernelSplit split = build_split(grid, config.beta);

  IterationTrace trace;
  const double u_linf = u0.max_abs();
  const double theta_cr = zygmund_norm(theta0, config.r, family).value;
  trace.time_bound = existence_time(u_linf, theta_cr, config.c_existence);
  trace.horizon = config.stop_at_existence_time ? std::min(config.t_end, trace.time_bound) : config.t_end;
  if (!(trace.horizon > 0.0) || !std::isfinite(trace.horizon)) throw ConfigError("picard_iterate: empty horizon");

  const std::size_t K = static_cast<std::size_t>(std::ceil(trace.horizon / config.dt - 1e-9));
  const double dt = trace.horizon / static_cast<double>(K);
  for (std::size_t k = 0; k <= K; ++k) trace.times.push_back(dt * static_cast<double>(k));

  trace.initial_scale = u_linf + zygmund_norm(theta0, config.r - 1.0, family).value;
  const double psi0 = u_linf + theta_cr, C = config.c_existence;
  for (double t : trace.times) {
    const double den = 1.0 - C * t * psi0;
    trace.norm_bound_curve.push_back(den > 0.0 ? C * psi0 / den : std::numeric_limits<double>::infinity());
  }

  std::vector<ScalarField> theta(K + 1, smooth_truncate_initial(theta0, family, 2));
  std::vector<VectorField> u(K + 1, lowpass(u0, family, 2));
  const double threshold = 10.0 * std::max(theta0.max_abs(), 1e-300);

  for (std::size_t n = 1; n < n_max; ++n) {
    const int level = static_cast<int>(n) + 2;
    std::vector<ScalarField> theta_next;
    theta_next.reserve(K + 1);
    theta_next.push_back(smooth_truncate_initial(theta0, family, level));
    const StageVelocity velocity = [&](double t, const ScalarField&) { return sample_at(u, t / dt); };
    for (std::size_t k = 0; k < K; ++k) {
      theta_next.push_back(rk4_transport_step(theta_next.back(), trace.times[k], dt, velocity));
      const double m = theta_next.back().max_abs();
      if (!std::isfinite(m) || m > threshold)
        throw SimulationAbort("picard_iterate: theta^" + std::to_string(n + 1) + " blew up");
    }

    const VectorField base = lowpass(u0, family, level);
    std::vector<VectorField> u_next;
    u_next.reserve(K + 1);
    VectorField acc = VectorField::zeros(grid);
    VectorField f_prev = convolve_far(split, theta_next[0], u[0]);
    u_next.push_back(base);
    for (std::size_t k = 1; k <= K; ++k) {
      VectorField f = convolve_far(split, theta_next[k], u[k]);
      acc = acc + (f + f_prev).scaled(0.5 * dt);
      f_prev = std::move(f);
      u_next.push_back(base + convolve_near(split, theta_next[k] - theta_next[0]) - acc);
    }

    std::vector<double> d(K + 1);
    for (std::size_t k = 0; k <= K; ++k)
      d[k] = (u_next[k] - u[k]).max_abs() + zygmund_norm(theta_next[k] - theta[k], config.r - 1.0, family).value;
    trace.decrements.push_back(std::move(d));

    theta = std::move(theta_next);
    u = std::move(u_next);
  }

  const auto dT = trace.final_decrements();
  for (std::size_t i = 3; i < dT.size(); ++i) {
    if (dT[i] >= dT[i - 1] && dT[i - 1] >= dT[i - 2] && dT[i - 2] >= dT[i - 3] && dT[i] > 1e-13) {
      trace.warnings.push_back("D_n not decreasing over 3 consecutive n: the horizon may exceed the contraction window");
      break;
    }
  }
  trace.theta = std::move(theta);
  trace.u = std::move(u);
  return trace;
}

double fitted_decay_ratio(const std::vector<double>& d, double floor, std::size_t skip) {
  if (d.empty()) return 0.0;
  const double top = *std::max_element(d.begin(), d.end());
  std::vector<double> x, y;
  for (std::size_t i = skip; i < d.size(); ++i) {
    if (!(d[i] > floor * top)) continue;
    x.push_back(double(i));
    y.push_back(std::log(d[i]));
  }
  if (x.size() < 2) return 0.0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= double(x.size());
  my /= double(x.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my), sxx += (x[i] - mx) * (x[i] - mx);
  return std::exp(sxy / sxx);
}

}  // namespace gsqg
