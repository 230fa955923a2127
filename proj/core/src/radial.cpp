#include "gsqg/radial.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gsqg {
namespace {

using Rule = boost::math::quadrature::gauss<double, 10>;

void add_panel(std::vector<double>& nodes, std::vector<double>& weights, double a, double b) {
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  // Boost stores the nonnegative half of the symmetric rule.
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      nodes.push_back(mid);
      weights.push_back(half * w[i]);
      continue;
    }
    nodes.push_back(mid - half * x[i]);
    weights.push_back(half * w[i]);
    nodes.push_back(mid + half * x[i]);
    weights.push_back(half * w[i]);
  }
}

}  // namespace

RadialRule::RadialRule(double R, double max_width, int geometric_levels) {
  if (!(R > 0.0) || !(max_width > 0.0)) throw std::invalid_argument("RadialRule: bad extent");
  const double first = std::min(max_width, R);
  double lo = first * std::ldexp(1.0, -geometric_levels);
  // [0, lo] is negligible for an integrable singularity at this depth; take one panel anyway.
  add_panel(nodes, weights, 0.0, lo);
  for (int k = geometric_levels; k > 0; --k) {
    const double hi = first * std::ldexp(1.0, -k + 1);
    add_panel(nodes, weights, lo, hi);
    lo = hi;
  }
  const auto panels = static_cast<std::size_t>(std::ceil((R - first) / max_width));
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = first + (R - first) * static_cast<double>(p) / static_cast<double>(panels);
    const double b = first + (R - first) * static_cast<double>(p + 1) / static_cast<double>(panels);
    add_panel(nodes, weights, a, b);
  }
}

double RadialRule::integrate(const std::function<double(double)>& f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
  return s;
}

RadialTable::RadialTable(const std::function<double(double)>& f, double rho_max, double step) : step_(step) {
  const auto count = static_cast<std::size_t>(std::ceil(rho_max / step)) + 4;
  samples_.resize(count);
  for (std::size_t i = 0; i < count; ++i) samples_[i] = f(step * static_cast<double>(i));
}

RadialTable::RadialTable(std::vector<double> samples, double step) : samples_(std::move(samples)), step_(step) {
  if (samples_.size() < 6) throw std::invalid_argument("RadialTable: need at least 6 samples");
}

double RadialTable::operator()(double rho) const {
  if (rho < 0.0 || rho > rho_max()) throw std::out_of_range("RadialTable: rho outside table");
  const double t = rho / step_;
  // Six nodes around t, shifted inward at the table ends.
  long first = static_cast<long>(std::floor(t)) - 2;
  first = std::clamp(first, 0L, static_cast<long>(samples_.size()) - 6);
  double value = 0.0;
  for (int i = 0; i < 6; ++i) {
    double basis = 1.0;
    const double ti = static_cast<double>(first + i);
    for (int k = 0; k < 6; ++k) {
      if (k == i) continue;
      const double tk = static_cast<double>(first + k);
      basis *= (t - tk) / (ti - tk);
    }
    value += basis * samples_[static_cast<std::size_t>(first + i)];
  }
  return value;
}

RadialTable hankel_table(const std::function<double(double)>& w, double R, double rho_max, double step) {
  const double top = rho_max + 4.0 * step;
  // About a radian of phase per panel at the largest rho.
  const RadialRule rule(R, std::min(0.05, 1.0 / std::max(top, 1.0)), 24);
  std::vector<double> weighted(rule.nodes.size());
  for (std::size_t q = 0; q < rule.nodes.size(); ++q)
    weighted[q] = 2.0 * std::numbers::pi * rule.weights[q] * w(rule.nodes[q]) * rule.nodes[q];
  const auto count = static_cast<std::size_t>(std::ceil(top / step)) + 1;
  std::vector<double> samples(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double rho = step * static_cast<double>(i);
    double s = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) s += weighted[q] * std::cyl_bessel_j(0.0, rho * rule.nodes[q]);
    samples[i] = s;
  }
  return RadialTable(std::move(samples), step);
}

}  // namespace gsqg
