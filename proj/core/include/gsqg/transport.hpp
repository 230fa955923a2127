#pragma once

#include <functional>

#include "gsqg/field.hpp"

namespace gsqg {

/// -dealias(u . grad theta). Alias-free when theta and u are band-limited to
/// the 2/3 band.
ScalarField transport_rhs(const ScalarField& theta, const VectorField& u);

/// Velocity at time t given the transported scalar at that stage.
using StageVelocity = std::function<VectorField(double t, const ScalarField& theta)>;

/// One classical RK4 step of d_t theta = -dealias(u . grad theta).
ScalarField rk4_transport_step(const ScalarField& theta, double t, double dt, const StageVelocity& velocity);

/// Largest stable step under CFL = 0.5 for a velocity bound; +inf for u = 0.
double cfl_step(const Grid2D& grid, double u_linf, double cfl = 0.5);

}  // namespace gsqg
