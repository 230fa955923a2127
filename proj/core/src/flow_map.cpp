#include "gsqg/flow_map.hpp"

#include <algorithm>
#include <cmath>

#include "gsqg/error.hpp"

namespace gsqg {

VelocityHistory::VelocityHistory(std::vector<double> times, std::vector<VectorField> snapshots)
    : times_(std::move(times)), snapshots_(std::move(snapshots)) {
  if (times_.empty() || times_.size() != snapshots_.size()) throw ConfigError("velocity history: size mismatch");
  if (!std::is_sorted(times_.begin(), times_.end())) throw ConfigError("velocity history: times not sorted");
}

Point VelocityHistory::spatial(std::size_t k, const Point& x) const {
  const VectorField& u = snapshots_[k];
  const Grid2D& g = u.grid();
  const std::size_t n = g.n_side();
  const double h = g.spacing();
  double s1 = x[0] / h, s2 = x[1] / h;
  const double f1 = std::floor(s1), f2 = std::floor(s2);
  const double w1 = s1 - f1, w2 = s2 - f2;
  const auto wrap = [n](double f) {
    const long m = static_cast<long>(f) % static_cast<long>(n);
    return static_cast<std::size_t>(m < 0 ? m + static_cast<long>(n) : m);
  };
  const std::size_t a1 = wrap(f1), a2 = wrap(f2), b1 = (a1 + 1) % n, b2 = (a2 + 1) % n;
  Point out{};
  for (int c = 0; c < 2; ++c) {
    const auto v = u[c].values();
    out[c] = (1 - w1) * (1 - w2) * v[g.index(a1, a2)] + w1 * (1 - w2) * v[g.index(b1, a2)] +
             (1 - w1) * w2 * v[g.index(a1, b2)] + w1 * w2 * v[g.index(b1, b2)];
  }
  return out;
}

Point VelocityHistory::at(double t, const Point& x) const {
  const std::size_t m = times_.size();
  if (m == 1) return spatial(0, x);
  // window of up to four snapshots around t
  const std::size_t upper = std::upper_bound(times_.begin(), times_.end(), t) - times_.begin();
  const std::size_t width = std::min<std::size_t>(4, m);
  std::size_t first = upper >= 2 ? upper - 2 : 0;
  first = std::min(first, m - width);
  Point out{};
  for (std::size_t i = first; i < first + width; ++i) {
    double w = 1.0;
    for (std::size_t j = first; j < first + width; ++j)
      if (j != i) w *= (t - times_[j]) / (times_[i] - times_[j]);
    const Point v = spatial(i, x);
    out[0] += w * v[0];
    out[1] += w * v[1];
  }
  return out;
}

ParticlePaths flow_map(const VelocityHistory& u, const std::vector<Point>& particles, double dt, double t_end) {
  if (!(dt > 0.0)) throw ConfigError("flow_map: dt must be positive");
  const double t0 = u.t_begin();
  const bool steady = u.t_begin() == u.t_end();
  if (!steady && t_end > u.t_end() + 1e-12) throw ConfigError("flow_map: t_end beyond the velocity history");
  const std::size_t steps = t_end > t0 ? static_cast<std::size_t>(std::ceil((t_end - t0) / dt - 1e-9)) : 0;
  const double step = steps ? (t_end - t0) / static_cast<double>(steps) : 0.0;

  ParticlePaths paths;
  paths.times.push_back(t0);
  paths.positions.push_back(particles);
  std::vector<Point> x = particles;
  for (std::size_t s = 0; s < steps; ++s) {
    const double t = t0 + step * static_cast<double>(s);
    for (auto& p : x) {
      const auto add = [](const Point& a, const Point& b, double c) { return Point{a[0] + c * b[0], a[1] + c * b[1]}; };
      const Point k1 = u.at(t, p);
      const Point k2 = u.at(t + step / 2, add(p, k1, step / 2));
      const Point k3 = u.at(t + step / 2, add(p, k2, step / 2));
      const Point k4 = u.at(t + step, add(p, k3, step));
      for (int c = 0; c < 2; ++c) p[c] += step / 6.0 * (k1[c] + 2 * k2[c] + 2 * k3[c] + k4[c]);
      if (!std::isfinite(p[0]) || !std::isfinite(p[1])) throw SimulationAbort("flow_map: particle left the finite range");
    }
    paths.times.push_back(t + step);
    paths.positions.push_back(x);
  }
  return paths;
}

double polygon_area(const std::vector<Point>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    a += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * std::abs(a);
}

std::vector<Point> square_boundary(const Point& c, double side, std::size_t per_edge) {
  std::vector<Point> out;
  const double h = side / 2.0;
  const Point corners[4] = {{c[0] - h, c[1] - h}, {c[0] + h, c[1] - h}, {c[0] + h, c[1] + h}, {c[0] - h, c[1] + h}};
  for (int e = 0; e < 4; ++e) {
    const Point& a = corners[e];
    const Point& b = corners[(e + 1) % 4];
    for (std::size_t k = 0; k < per_edge; ++k) {
      const double s = static_cast<double>(k) / static_cast<double>(per_edge);
      out.push_back({a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])});
    }
  }
  return out;
}

}  // namespace gsqg
