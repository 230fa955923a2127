#include "gsqg/fundamental_solution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "gsqg/error.hpp"
#include "gsqg/kernels.hpp"

namespace gsqg {
namespace {

using std::numbers::pi;

constexpr int cell_quadrature_reach = 4;

double ewald_eta(double L) { return std::max(0.1, 160.0 / (L * L)); }

// C r^{-beta} P(beta/2, eta r^2), bounded at the origin.
double smooth_part(double c, double beta, double eta, double r) {
  const double x = eta * r * r;
  if (x < 1e-300) return c * std::pow(eta, beta / 2.0) / std::tgamma(beta / 2.0 + 1.0);
  return c * std::pow(r, -beta) * boost::math::gamma_p(beta / 2.0, x);
}

double short_part(double c, double beta, double eta, double r) {
  return c * std::pow(r, -beta) * boost::math::gamma_q(beta / 2.0, eta * r * r);
}

// Average of f over the cell [x - h/2, x + h/2] x [y - h/2, y + h/2].
template <class F>
double cell_average(F f, double x, double y, double h) {
  using rule = boost::math::quadrature::gauss<double, 10>;
  double sum = 0.0;
  for (std::size_t a = 0; a < rule::abscissa().size(); ++a) {
    for (int sa : {-1, 1}) {
      if (rule::abscissa()[a] == 0.0 && sa < 0) continue;
      const double wa = rule::weights()[a];
      const double ua = x + sa * rule::abscissa()[a] * h / 2.0;
      for (std::size_t b = 0; b < rule::abscissa().size(); ++b) {
        for (int sb : {-1, 1}) {
          if (rule::abscissa()[b] == 0.0 && sb < 0) continue;
          const double ub = y + sb * rule::abscissa()[b] * h / 2.0;
          sum += wa * rule::weights()[b] * f(std::hypot(ua, ub));
        }
      }
    }
  }
  return sum / 4.0;
}

// int over the unit cell of |x|^{-p}.
double unit_cell_power_integral(double p) {
  using rule = boost::math::quadrature::gauss<double, 20>;
  const double s = rule::integrate([p](double phi) { return std::pow(2.0 * std::cos(phi), p - 2.0); }, 0.0, pi / 4.0);
  return 8.0 / (2.0 - p) * s;
}

}  // namespace

ScalarField fundamental_convolution(const ScalarField& g, double beta, double scale) {
  const Grid2D& grid = g.grid();
  const double c = scale * c_beta(beta);
  const double eta = ewald_eta(grid.box_length());
  const double h = grid.spacing();
  const std::size_t n = grid.n_side();

  std::vector<double> samples(grid.size());
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      const long m1 = grid.mode(i1), m2 = grid.mode(i2);
      const double x = grid.centered_coordinate(i1), y = grid.centered_coordinate(i2);
      double v;
      if (m1 == 0 && m2 == 0) {
        v = c * std::pow(h, -beta) * unit_cell_power_integral(beta) -
            cell_average([&](double r) { return smooth_part(c, beta, eta, r); }, 0.0, 0.0, h);
      } else if (std::abs(m1) <= cell_quadrature_reach && std::abs(m2) <= cell_quadrature_reach) {
        v = cell_average([&](double r) { return short_part(c, beta, eta, r); }, x, y, h);
      } else {
        v = short_part(c, beta, eta, std::hypot(x, y));
      }
      samples[grid.index(i1, i2)] = v;
    }
  }
  const ScalarField kernel = ScalarField::from_values(grid, std::move(samples));

  const double L2 = grid.box_length() * grid.box_length();
  std::vector<cplx> out(grid.size());
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      const std::size_t k = grid.index(i1, i2);
      const double rho = std::hypot(grid.wavenumber(i1), grid.wavenumber(i2));
      if (rho == 0.0) continue;
      const double far = scale * std::pow(rho, beta - 2.0) *
                         boost::math::gamma_q(1.0 - beta / 2.0, rho * rho / (4.0 * eta));
      out[k] = (L2 * kernel.coefficients()[k] + far) * g.coefficients()[k];
    }
  }
  return ScalarField::from_coefficients(grid, std::move(out));
}

double fundamental_solution_residual(const ScalarField& g, double beta, double scale) {
  const ScalarField w = fundamental_convolution(g, beta, scale);
  const Grid2D& grid = g.grid();
  std::vector<cplx> diff(grid.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i2 = 0; i2 < grid.n_side(); ++i2) {
    for (std::size_t i1 = 0; i1 < grid.n_side(); ++i1) {
      const std::size_t k = grid.index(i1, i2);
      const double rho = std::hypot(grid.wavenumber(i1), grid.wavenumber(i2));
      if (rho == 0.0) continue;
      const cplx lhs = std::pow(rho, 2.0 - beta) * w.coefficients()[k];
      num += std::norm(lhs - g.coefficients()[k]);
      den += std::norm(g.coefficients()[k]);
    }
  }
  if (den == 0.0) throw ConfigError("test function has no nonzero mode");
  return std::sqrt(num / den);
}

ScalarField centered_gaussian(const Grid2D& grid, double sigma) {
  const double c = grid.box_length() / 2.0;
  return ScalarField::sample(grid, [&](double x, double y) {
    const double r2 = (x - c) * (x - c) + (y - c) * (y - c);
    return std::exp(-r2 / (2.0 * sigma * sigma));
  });
}

VerificationReport verify_fundamental_solution(double beta, const Grid2D& grid) {
  VerificationReport report;
  report.check_id = "fundamental_solution";
  report.parameters = {{"beta", beta}, {"n_side", double(grid.n_side())}, {"L", grid.box_length()}};
  const double sigma = std::min(2.0, grid.box_length() / 20.0);
  report.parameters["sigma"] = sigma;

  std::vector<double> errors;
  for (std::size_t level = 4; level >= 1; level /= 2) {
    const std::size_t n = grid.n_side() / level;
    if (n < 16) continue;
    const Grid2D g(n, grid.box_length());
    const double e = fundamental_solution_residual(centered_gaussian(g, sigma), beta);
    errors.push_back(e);
    report.measured.push_back({"n=" + std::to_string(n), 0, e});
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < errors.size(); ++i) decreasing = decreasing && errors[i] < errors[i - 1];
  report.ceiling = 1e-2;
  report.stability = 0.0;
  const bool ok = !errors.empty() && errors.back() <= report.ceiling && decreasing;
  if (!decreasing) report.notes.push_back("residual not decreasing under refinement");
  report.verdict = ok ? Verdict::pass : Verdict::fail;
  return report;
}

}  // namespace gsqg
