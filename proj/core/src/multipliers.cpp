#include "gsqg/multipliers.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "gsqg/error.hpp"

namespace gsqg {
namespace {

const cplx I(0.0, 1.0);

std::array<std::vector<cplx>, 2> multiply(const ScalarField& f, const MultiplierSpec& m) {
  if (!m.symbol) throw ConfigError("multiplier '" + m.name + "' has no symbol");
  if (m.singular_at_origin && !m.zero_mode)
    throw ConfigError("multiplier '" + m.name + "' is singular at the origin and has no zero-mode policy");
  const Grid2D& g = f.grid();
  const std::size_t n = g.n_side();
  std::array<std::vector<cplx>, 2> out{std::vector<cplx>(g.size()), std::vector<cplx>(g.size())};
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    const double xi2 = g.wavenumber(i2);
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      const std::size_t k = g.index(i1, i2);
      const std::array<cplx, 2> s = (k == 0 && m.zero_mode) ? *m.zero_mode : m.symbol(g.wavenumber(i1), xi2);
      for (std::size_t c = 0; c < m.components; ++c) out[c][k] = s[c] * f.coefficients()[k];
    }
  }
  return out;
}

// |xi|^p on the grid (0 at the zero mode), cached per grid and exponent.
const std::vector<double>& radial_power_table(const Grid2D& g, double p) {
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, double, double>, std::vector<double>> cache;
  std::lock_guard lock(mutex);
  auto& table = cache[{g.n_side(), g.box_length(), p}];
  if (table.empty()) {
    const std::size_t n = g.n_side();
    table.resize(g.size());
    for (std::size_t i2 = 0; i2 < n; ++i2)
      for (std::size_t i1 = 0; i1 < n; ++i1) {
        const double r2 = g.wavenumber(i1) * g.wavenumber(i1) + g.wavenumber(i2) * g.wavenumber(i2);
        table[g.index(i1, i2)] = r2 > 0.0 ? std::pow(r2, 0.5 * p) : 0.0;
      }
  }
  return table;
}

// (i xi)^a along one axis.
std::vector<cplx> axis_derivative_factors(const Grid2D& g, int a) {
  std::vector<cplx> f(g.n_side(), 1.0);
  for (std::size_t i = 0; i < g.n_side(); ++i)
    for (int k = 0; k < a; ++k) f[i] *= I * g.wavenumber(i);
  return f;
}

double parse_number(const std::string& text, const std::string& whole) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad multiplier parameter in '" + whole + "'");
  }
}

}  // namespace

MultiplierSpec MultiplierSpec::scalar(std::string name, std::function<cplx(double, double)> symbol,
                                      std::optional<cplx> zero_mode, bool singular) {
  MultiplierSpec m;
  m.name = std::move(name);
  m.components = 1;
  m.symbol = [symbol = std::move(symbol)](double a, double b) { return std::array<cplx, 2>{symbol(a, b), 0.0}; };
  if (zero_mode) m.zero_mode = std::array<cplx, 2>{*zero_mode, 0.0};
  m.singular_at_origin = singular;
  return m;
}

MultiplierSpec frac_laplacian(double s) {
  return MultiplierSpec::scalar(
      "frac_laplacian:" + std::to_string(s), [s](double a, double b) { return cplx(std::pow(std::hypot(a, b), s)); },
      cplx(0.0), s < 0.0);
}

MultiplierSpec bessel(double s) {
  return MultiplierSpec::scalar("bessel:" + std::to_string(s),
                                [s](double a, double b) { return cplx(std::pow(1.0 + a * a + b * b, 0.5 * s)); },
                                cplx(1.0));
}

MultiplierSpec grad_perp() {
  MultiplierSpec m;
  m.name = "grad_perp";
  m.components = 2;
  m.symbol = [](double a, double b) { return std::array<cplx, 2>{-I * b, I * a}; };
  return m;
}

MultiplierSpec biot_savart(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("biot_savart: beta must lie in (0, 1)");
  MultiplierSpec m;
  m.name = "biot_savart:" + std::to_string(beta);
  m.components = 2;
  m.symbol = [beta](double a, double b) {
    const double w = std::pow(a * a + b * b, 0.5 * (beta - 2.0));
    return std::array<cplx, 2>{-I * b * w, I * a * w};
  };
  m.zero_mode = std::array<cplx, 2>{0.0, 0.0};
  m.singular_at_origin = true;
  return m;
}

MultiplierSpec parse_multiplier(const std::string& text) {
  const auto colon = text.find(':');
  const std::string key = text.substr(0, colon);
  if (key == "grad_perp") {
    if (colon != std::string::npos) throw ConfigError("grad_perp takes no parameter");
    return grad_perp();
  }
  if (colon == std::string::npos) throw ConfigError("multiplier '" + text + "' needs a parameter");
  const double p = parse_number(text.substr(colon + 1), text);
  if (key == "frac_laplacian") return frac_laplacian(p);
  if (key == "bessel") return bessel(p);
  if (key == "biot_savart") return biot_savart(p);
  throw ConfigError("unknown multiplier '" + key + "'");
}

ScalarField apply_multiplier(const ScalarField& f, const MultiplierSpec& m) {
  if (m.components != 1) throw ConfigError("multiplier '" + m.name + "' is vector valued");
  auto c = multiply(f, m);
  return ScalarField::from_coefficients(f.grid(), std::move(c[0]));
}

VectorField apply_vector_multiplier(const ScalarField& f, const MultiplierSpec& m) {
  if (m.components != 2) throw ConfigError("multiplier '" + m.name + "' is scalar valued");
  auto c = multiply(f, m);
  return {ScalarField::from_coefficients(f.grid(), std::move(c[0])),
          ScalarField::from_coefficients(f.grid(), std::move(c[1]))};
}

ScalarField derivative(const ScalarField& f, int a1, int a2) {
  if (a1 < 0 || a2 < 0) throw DomainError("derivative: negative order");
  if (a1 == 0 && a2 == 0) return f;
  const Grid2D& g = f.grid();
  const std::size_t n = g.n_side();
  const auto f1 = axis_derivative_factors(g, a1), f2 = axis_derivative_factors(g, a2);
  std::vector<cplx> c(f.coefficients().begin(), f.coefficients().end());
  for (std::size_t i2 = 0; i2 < n; ++i2)
    for (std::size_t i1 = 0; i1 < n; ++i1) c[g.index(i1, i2)] *= f1[i1] * f2[i2];
  return ScalarField::from_coefficients(g, std::move(c));
}

VectorField gradient(const ScalarField& f) { return {derivative(f, 1, 0), derivative(f, 0, 1)}; }

ScalarField divergence(const VectorField& v) { return derivative(v[0], 1, 0) + derivative(v[1], 0, 1); }

VectorField biot_savart_velocity(const ScalarField& theta, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("biot_savart: beta must lie in (0, 1)");
  const Grid2D& g = theta.grid();
  const std::size_t n = g.n_side();
  const auto& w = radial_power_table(g, beta - 2.0);
  std::vector<cplx> a(g.size()), b(g.size());
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    const double xi2 = g.wavenumber(i2);
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      const std::size_t k = g.index(i1, i2);
      const cplx c = theta.coefficients()[k] * w[k];
      a[k] = -I * xi2 * c;
      b[k] = I * g.wavenumber(i1) * c;
    }
  }
  return {ScalarField::from_coefficients(g, std::move(a)), ScalarField::from_coefficients(g, std::move(b))};
}

ScalarField dealiased_product(const ScalarField& f, const ScalarField& g) {
  return dealias(dealias(f).pointwise(dealias(g)));
}

ScalarField kato_ponce_commutator(const ScalarField& f, const ScalarField& g, double s) {
  if (!(s > 0.0)) throw DomainError("kato_ponce_commutator: s must be positive");
  const auto J = bessel(s);
  return apply_multiplier(dealiased_product(f, g), J) - dealiased_product(f, apply_multiplier(g, J));
}

}  // namespace gsqg
