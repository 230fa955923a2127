#pragma once

#include <array>
#include <vector>

#include "gsqg/field.hpp"

namespace gsqg {

using Point = std::array<double, 2>;

/// Velocity snapshots u(t_k); interpolated bilinearly in space (periodic) and
/// by 4-point Lagrange polynomials in time (lower order when fewer snapshots
/// exist; a single snapshot is a steady field).
class VelocityHistory {
 public:
  VelocityHistory(std::vector<double> times, std::vector<VectorField> snapshots);

  Point at(double t, const Point& x) const;
  double t_begin() const { return times_.front(); }
  double t_end() const { return times_.back(); }

 private:
  Point spatial(std::size_t k, const Point& x) const;

  std::vector<double> times_;
  std::vector<VectorField> snapshots_;
};

struct ParticlePaths {
  std::vector<double> times;
  /// positions[step][particle], not wrapped into the box.
  std::vector<std::vector<Point>> positions;
};

/// RK4 for dX/dt = u(t, X) from the first snapshot time to t_end with step
/// dt (rounded to land on t_end). Throws SimulationAbort on a non-finite
/// position; ConfigError when t_end lies outside a non-steady history.
ParticlePaths flow_map(const VelocityHistory& u, const std::vector<Point>& particles, double dt, double t_end);

/// Shoelace area of the closed polygon through the given vertices.
double polygon_area(const std::vector<Point>& vertices);

/// Counter-clockwise boundary points of the square of given side centered at c.
std::vector<Point> square_boundary(const Point& c, double side, std::size_t per_edge);

}  // namespace gsqg
