#include "gsqg/kernels.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "gsqg/error.hpp"
#include "gsqg/multipliers.hpp"

namespace gsqg {
namespace {

using std::numbers::pi;
const cplx I(0.0, 1.0);

Jet phi_jet(double c, double beta, double r) { return c * pow(Jet::variable(r), -beta); }

// int over the unit cell [-1/2, 1/2]^2 of |x|^{-p}, p < 2.
double unit_cell_power_integral(double p) {
  const RadialRule rule(pi / 4.0, pi / 40.0, 0);
  return 8.0 / (2.0 - p) * rule.integrate([p](double phi) { return std::pow(2.0 * std::cos(phi), p - 2.0); });
}

std::vector<cplx> transform_scaled(const Grid2D& g, const ScalarField& samples) {
  // continuous transform ~ h^2 sum K(x) e^{-i xi x} = L^2 c_k
  std::vector<cplx> c(samples.coefficients().begin(), samples.coefficients().end());
  const double L2 = g.box_length() * g.box_length();
  for (auto& x : c) x *= L2;
  return c;
}

// The table depends only on beta and its extent; splits on the same or
// smaller grids reuse it.
RadialTable near_transform_table(double beta, double rho_max) {
  static std::mutex mutex;
  static std::map<double, RadialTable> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(beta);
  if (it != cache.end() && it->second.rho_max() >= rho_max) return it->second;
  const double c = c_beta(beta);
  RadialTable table = hankel_table([c, beta](double r) { return cutoff_a(r) * c * std::pow(r, -beta); }, 2.0, rho_max);
  cache[beta] = table;
  return table;
}

}  // namespace

double c_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
  return std::tgamma(beta / 2.0) / (std::pow(2.0, 2.0 - beta) * pi * std::tgamma(1.0 - beta / 2.0));
}

double cutoff_a(double r) { return plateau(r, 1.0, 2.0); }
Jet cutoff_a(Jet r) { return plateau(r, 1.0, 2.0); }

KernelSplit::KernelSplit(const Grid2D& grid, double beta, KernelRealization realization)
    : grid_(grid), beta_(beta), c_(c_beta(beta)), realization_(realization) {
  near_table_ = near_transform_table(beta, grid.max_wavenumber());

  const std::size_t n = grid.n_side();
  near_symbol_.resize(grid.size());
  far_symbol_.resize(grid.size());
  if (realization == KernelRealization::spectral) {
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      const double xi2 = grid.wavenumber(i2);
      for (std::size_t i1 = 0; i1 < n; ++i1) {
        const std::size_t k = grid.index(i1, i2);
        const double xi1 = grid.wavenumber(i1);
        const double rho = std::hypot(xi1, xi2);
        if (rho == 0.0) {
          near_symbol_[k] = {0.0, 0.0};
          far_symbol_[k] = {};
          continue;
        }
        const double A = near_table_(rho);
        const double G = std::pow(rho, beta - 2.0) - A;
        const std::array<double, 2> xi{xi1, xi2}, perp{-xi2, xi1};
        near_symbol_[k] = {I * perp[0] * A, I * perp[1] * A};
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) far_symbol_[k][i][j] = -xi[j] * perp[i] * G;
      }
    }
  } else {
    const auto near = near_samples();
    const auto far = far_samples();
    const auto n0 = transform_scaled(grid, near[0]), n1 = transform_scaled(grid, near[1]);
    std::array<std::array<std::vector<cplx>, 2>, 2> f;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) f[i][j] = transform_scaled(grid, far[i][j]);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      near_symbol_[k] = {n0[k], n1[k]};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) far_symbol_[k][i][j] = f[i][j][k];
    }
  }
}

double KernelSplit::near_radial(double r) const {
  if (r <= 0.0 || r >= 2.0) return 0.0;
  const Jet x = Jet::variable(r);
  return (cutoff_a(x) * phi_jet(c_, beta_, r)).d;
}

std::array<double, 2> KernelSplit::far_radial(double r) const {
  if (r <= 1.0) return {0.0, 0.0};
  const Jet x = Jet::variable(r);
  const Jet G = (Jet::constant(1.0) - cutoff_a(x)) * phi_jet(c_, beta_, r);
  return {G.d, G.dd};
}

std::array<double, 2> KernelSplit::near_at(double x, double y) const {
  const double r = std::hypot(x, y);
  if (r == 0.0 || r >= 2.0) return {0.0, 0.0};
  const double d = near_radial(r) / r;
  return {-y * d, x * d};
}

std::array<std::array<double, 2>, 2> KernelSplit::far_at(double x, double y) const {
  const double r = std::hypot(x, y);
  if (r <= 1.0) return {};
  const auto [g1, g2] = far_radial(r);
  const std::array<double, 2> p{x / r, y / r};
  std::array<std::array<double, 2>, 2> H{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) H[i][j] = g2 * p[i] * p[j] + (g1 / r) * ((i == j ? 1.0 : 0.0) - p[i] * p[j]);
  return {{{-H[1][0], -H[1][1]}, {H[0][0], H[0][1]}}};
}

VectorField KernelSplit::near_samples() const {
  const std::size_t n = grid_.n_side();
  std::vector<double> a(grid_.size()), b(grid_.size());
  for (std::size_t i2 = 0; i2 < n; ++i2)
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      const auto v = near_at(grid_.centered_coordinate(i1), grid_.centered_coordinate(i2));
      a[grid_.index(i1, i2)] = v[0];
      b[grid_.index(i1, i2)] = v[1];
    }
  return {ScalarField::from_values(grid_, std::move(a)), ScalarField::from_values(grid_, std::move(b))};
}

std::array<std::array<ScalarField, 2>, 2> KernelSplit::far_samples() const {
  const std::size_t n = grid_.n_side();
  const double R = 0.5 * grid_.box_length();
  std::array<std::array<std::vector<double>, 2>, 2> v;
  for (auto& row : v)
    for (auto& e : row) e.assign(grid_.size(), 0.0);
  for (std::size_t i2 = 0; i2 < n; ++i2)
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      const double x = grid_.centered_coordinate(i1), y = grid_.centered_coordinate(i2);
      if (std::hypot(x, y) >= R) continue;
      const auto M = far_at(x, y);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v[i][j][grid_.index(i1, i2)] = M[i][j];
    }
  return {{{ScalarField::from_values(grid_, std::move(v[0][0])), ScalarField::from_values(grid_, std::move(v[0][1]))},
           {ScalarField::from_values(grid_, std::move(v[1][0])), ScalarField::from_values(grid_, std::move(v[1][1]))}}};
}

double KernelSplit::near_l1() const { return near_l1_quadrature(beta_, grid_.spacing()); }

double KernelSplit::far_tail_bound() const {
  return 2.0 * pi * c_ * (beta_ + 2.0) * std::pow(0.5 * grid_.box_length(), -beta_);
}

KernelSplit build_split(const Grid2D& grid, double beta, KernelRealization realization) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
  if (grid.spacing() > 0.125) throw ConfigError("kernel split needs grid spacing <= 1/8");
  if (grid.box_length() < 16.0) throw ConfigError("kernel split needs box length >= 16");
  return KernelSplit(grid, beta, realization);
}

VectorField convolve_near(const KernelSplit& split, const ScalarField& theta) {
  const Grid2D& g = theta.grid();
  if (!(g == split.grid())) throw ConfigError("convolve_near: grid mismatch");
  std::vector<cplx> a(g.size()), b(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto s = split.near_symbol(k);
    a[k] = s[0] * theta.coefficients()[k];
    b[k] = s[1] * theta.coefficients()[k];
  }
  return {ScalarField::from_coefficients(g, std::move(a)), ScalarField::from_coefficients(g, std::move(b))};
}

VectorField convolve_far(const KernelSplit& split, const ScalarField& theta, const VectorField& u) {
  const Grid2D& g = theta.grid();
  if (!(g == split.grid()) || !(u.grid() == g)) throw ConfigError("convolve_far: grid mismatch");
  const ScalarField p0 = dealiased_product(theta, u[0]), p1 = dealiased_product(theta, u[1]);
  std::vector<cplx> a(g.size()), b(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto M = split.far_symbol(k);
    const cplx q0 = p0.coefficients()[k], q1 = p1.coefficients()[k];
    a[k] = M[0][0] * q0 + M[0][1] * q1;
    b[k] = M[1][0] * q0 + M[1][1] * q1;
  }
  return {ScalarField::from_coefficients(g, std::move(a)), ScalarField::from_coefficients(g, std::move(b))};
}

VectorField convolve_far_velocity_sampled(const KernelSplit& split, const ScalarField& theta) {
  const Grid2D& g = split.grid();
  if (!(theta.grid() == g)) throw ConfigError("convolve_far_velocity_sampled: grid mismatch");
  const std::size_t n = g.n_side();
  const double R = 0.5 * g.box_length();
  std::vector<double> a(g.size(), 0.0), b(g.size(), 0.0);
  for (std::size_t i2 = 0; i2 < n; ++i2)
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      const double x = g.centered_coordinate(i1), y = g.centered_coordinate(i2);
      const double r = std::hypot(x, y);
      if (r <= 1.0 || r >= R) continue;
      const double d = plateau(r, 0.5 * R, R) * split.far_radial(r)[0] / r;
      a[g.index(i1, i2)] = -y * d;
      b[g.index(i1, i2)] = x * d;
    }
  const auto ka = transform_scaled(g, ScalarField::from_values(g, std::move(a)));
  const auto kb = transform_scaled(g, ScalarField::from_values(g, std::move(b)));
  std::vector<cplx> ca(g.size()), cb(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    ca[k] = ka[k] * theta.coefficients()[k];
    cb[k] = kb[k] * theta.coefficients()[k];
  }
  return {ScalarField::from_coefficients(g, std::move(ca)), ScalarField::from_coefficients(g, std::move(cb))};
}

double near_l1_quadrature(double beta, double h) {
  const double c = c_beta(beta);
  auto radial = [&](double r) {
    if (r <= 0.0 || r >= 2.0) return 0.0;
    return std::abs((cutoff_a(Jet::variable(r)) * phi_jet(c, beta, r)).d);
  };
  // origin cell: a = 1 there, |grad Phi| = c beta |x|^{-beta-1}
  double total = c * beta * std::pow(h, 1.0 - beta) * unit_cell_power_integral(beta + 1.0);

  // 10 x 10 Gauss-Legendre on cells within 4 cells of the origin.
  std::vector<double> x, w;
  {
    const RadialRule unit(1.0, 1.0, 0);  // a single 10-point panel on [0, 1]
    for (std::size_t q = 0; q < unit.nodes.size(); ++q) {
      x.push_back(unit.nodes[q] - 0.5);
      w.push_back(unit.weights[q]);
    }
  }
  const long cells = static_cast<long>(std::ceil(2.0 / h)) + 1;
  for (long j = -cells; j <= cells; ++j)
    for (long i = -cells; i <= cells; ++i) {
      if (i == 0 && j == 0) continue;
      const double cx = i * h, cy = j * h;
      if (std::max(std::abs(i), std::abs(j)) <= 4) {
        double s = 0.0;
        for (std::size_t a = 0; a < x.size(); ++a)
          for (std::size_t b = 0; b < x.size(); ++b)
            s += w[a] * w[b] * radial(std::hypot(cx + h * x[a], cy + h * x[b]));
        total += s * h * h;
      } else {
        total += radial(std::hypot(cx, cy)) * h * h;
      }
    }
  return total;
}

}  // namespace gsqg
