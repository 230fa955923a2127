#include "gsqg/transport.hpp"

#include <limits>

#include "gsqg/multipliers.hpp"

namespace gsqg {

ScalarField transport_rhs(const ScalarField& theta, const VectorField& u) {
  const ScalarField d1 = derivative(theta, 1, 0);
  const ScalarField d2 = derivative(theta, 0, 1);
  const auto a = u[0].values(), b = u[1].values();
  const auto g1 = d1.values(), g2 = d2.values();
  std::vector<double> adv(a.size());
  for (std::size_t i = 0; i < adv.size(); ++i) adv[i] = -(a[i] * g1[i] + b[i] * g2[i]);
  return dealias(ScalarField::from_values(theta.grid(), std::move(adv)));
}

ScalarField rk4_transport_step(const ScalarField& theta, double t, double dt, const StageVelocity& velocity) {
  const ScalarField k1 = transport_rhs(theta, velocity(t, theta));
  const ScalarField s2 = theta + (0.5 * dt) * k1;
  const ScalarField k2 = transport_rhs(s2, velocity(t + 0.5 * dt, s2));
  const ScalarField s3 = theta + (0.5 * dt) * k2;
  const ScalarField k3 = transport_rhs(s3, velocity(t + 0.5 * dt, s3));
  const ScalarField s4 = theta + dt * k3;
  const ScalarField k4 = transport_rhs(s4, velocity(t + dt, s4));
  return theta + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double cfl_step(const Grid2D& grid, double u_linf, double cfl) {
  if (u_linf <= 0.0) return std::numeric_limits<double>::infinity();
  return cfl * grid.spacing() / u_linf;
}

}  // namespace gsqg
