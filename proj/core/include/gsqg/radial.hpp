#pragma once

#include <functional>
#include <vector>

namespace gsqg {

/// Quadrature rule on [0, R] for integrands with an integrable power
/// singularity at r = 0: geometric panels toward the origin, then uniform
/// panels no wider than max_width, 10-point Gauss-Legendre on each.
struct RadialRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  RadialRule(double R, double max_width, int geometric_levels = 40);
  double integrate(const std::function<double(double)>& f) const;
};

/// Samples of a smooth function of rho on [0, rho_max] with spacing step,
/// evaluated by 6-point Lagrange interpolation.
class RadialTable {
 public:
  RadialTable() = default;
  RadialTable(const std::function<double(double)>& f, double rho_max, double step = 0.01);
  /// Fills from precomputed samples at rho = i * step.
  RadialTable(std::vector<double> samples, double step);

  double operator()(double rho) const;
  double rho_max() const { return step_ * static_cast<double>(samples_.size() - 1); }

 private:
  std::vector<double> samples_;
  double step_ = 0.01;
};

/// 2 pi int_0^R w(r) J0(rho r) r dr on a table of rho: the Fourier transform
/// of the radial function w(|x|) supported in B_R.
RadialTable hankel_table(const std::function<double(double)>& w, double R, double rho_max, double step = 0.01);

}  // namespace gsqg
