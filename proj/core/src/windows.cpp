#include "gsqg/windows.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gsqg/error.hpp"
#include "gsqg/multipliers.hpp"
#include "gsqg/profiles.hpp"

namespace gsqg {
namespace {

double wrap(double d, double L) { return d - L * std::round(d / L); }

double binomial(int m, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (m - k + i) / i;
  return b;
}

// Components D^a g with |a| = m and their multiplicity in the tensor nabla^m g.
std::vector<std::pair<ScalarField, double>> tensor_components(const ScalarField& g, int m) {
  std::vector<std::pair<ScalarField, double>> out;
  for (int a1 = 0; a1 <= m; ++a1) out.emplace_back(derivative(g, a1, m - a1), binomial(m, a1));
  return out;
}

double tensor_energy(const ScalarField& g, int m) {
  double e = 0.0;
  for (const auto& [d, mult] : tensor_components(g, m)) e += mult * d.l2_norm() * d.l2_norm();
  return e;
}

// A(sigma): iint |u(x)-u(y)|^2 / |x-y|^{2+2 sigma} = 2 A(sigma) ||u||^2_{dot H^sigma} in the plane.
double slobodeckij_constant(double sigma) {
  return std::numbers::pi * std::tgamma(1.0 - sigma) / (sigma * std::pow(4.0, sigma) * std::tgamma(1.0 + sigma));
}

}  // namespace

WindowFamily::WindowFamily(const Grid2D& grid, double scale) : grid_(grid), scale_(scale) {
  if (!(scale > 0.0)) throw ConfigError("window scale must be positive");
  if (4.0 * scale >= grid.box_length()) throw ConfigError("window support does not fit in the periodic box");
  const auto m = static_cast<std::size_t>(std::ceil(grid.box_length() / scale - 1e-12));
  const double spacing = grid.box_length() / static_cast<double>(m);
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t a = 0; a < m; ++a) centers_.push_back({a * spacing, b * spacing});
}

double WindowFamily::profile(double r) { return plateau(r, 1.0, 2.0); }

double WindowFamily::weight(std::size_t center, double x, double y) const {
  const double L = grid_.box_length();
  const double dx = wrap(x - centers_[center][0], L), dy = wrap(y - centers_[center][1], L);
  return profile(std::hypot(dx, dy) / scale_);
}

double WindowFamily::covering_radius() const {
  const double spacing = grid_.box_length() / std::sqrt(static_cast<double>(centers_.size()));
  return spacing * std::numbers::sqrt2 / 2.0;
}

ScalarField extract_window(const ScalarField& f, const WindowFamily& windows, std::size_t center) {
  const Grid2D& g = f.grid();
  const double h = g.spacing();
  const auto need = static_cast<std::size_t>(std::ceil(8.0 * windows.scale() / h));
  const std::size_t M = std::max<std::size_t>(8, std::bit_ceil(need));
  const Grid2D box(M, static_cast<double>(M) * h);
  const auto [cx, cy] = windows.centers()[center];
  const auto n = static_cast<long>(g.n_side());
  const long c1 = std::lround(cx / h), c2 = std::lround(cy / h);
  const long half = static_cast<long>(M / 2);
  std::vector<double> v(box.size(), 0.0);
  for (std::size_t i2 = 0; i2 < M; ++i2) {
    const long t2 = c2 - half + static_cast<long>(i2);
    const double dy = static_cast<double>(t2) * h - cy;
    for (std::size_t i1 = 0; i1 < M; ++i1) {
      const long t1 = c1 - half + static_cast<long>(i1);
      const double dx = static_cast<double>(t1) * h - cx;
      const double w = WindowFamily::profile(std::hypot(dx, dy) / windows.scale());
      if (w == 0.0) continue;
      const auto j1 = static_cast<std::size_t>(((t1 % n) + n) % n), j2 = static_cast<std::size_t>(((t2 % n) + n) % n);
      v[box.index(i1, i2)] = w * f.value(j1, j2);
    }
  }
  return ScalarField::from_values(box, std::move(v));
}

double slobodeckij_norm(const ScalarField& g, double s) {
  if (!(s > 0.0)) throw DomainError("slobodeckij_norm: s must be positive");
  const int m = static_cast<int>(std::floor(s));
  const double sigma = s - m;
  const double base = std::sqrt(g.l2_norm() * g.l2_norm() + (m > 0 ? tensor_energy(g, m) : 0.0));
  if (sigma == 0.0) return base;

  const Grid2D& grid = g.grid();
  const double h = grid.spacing();
  const long M = static_cast<long>(grid.n_side());
  const auto comps = tensor_components(g, m);

  // Component values interleaved per point, scaled by sqrt(multiplicity).
  const std::size_t nc = comps.size();
  std::vector<double> G(grid.size() * nc);
  double peak = 0.0;
  for (std::size_t c = 0; c < nc; ++c) {
    const double scale = std::sqrt(comps[c].second);
    const auto v = comps[c].first.values();
    for (std::size_t k = 0; k < grid.size(); ++k) {
      G[k * nc + c] = scale * v[k];
      peak = std::max(peak, std::abs(G[k * nc + c]));
    }
  }
  if (peak == 0.0) return base;
  // Support taken from the samples of g: spectral derivatives carry small
  // ringing outside it that is discretization error, not signal.
  std::vector<char> inside(grid.size(), 0);
  std::vector<std::size_t> support;
  const auto gv = g.values();
  const double gmax = g.max_abs();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (std::abs(gv[k]) > 1e-15 * gmax) {
      inside[k] = 1;
      support.push_back(k);
    }
  }

  // Half-plane offsets: each unordered pair inside the support is met once and
  // counted twice; a pair with one point outside is met from the inside point.
  const double reach = 4.0;
  const long dmax = static_cast<long>(std::floor(reach / h));
  struct Offset {
    long d1, d2;
    double w;
  };
  std::vector<Offset> offsets;
  for (long d2 = 0; d2 <= dmax; ++d2)
    for (long d1 = -dmax; d1 <= dmax; ++d1) {
      if (d2 == 0 && d1 <= 0) continue;
      const double r = h * std::hypot(double(d1), double(d2));
      if (r > reach) continue;
      offsets.push_back({d1, d2, 2.0 * h * h * h * h * std::pow(r, -2.0 - 2.0 * sigma)});
    }

  double pairs = 0.0, mass = 0.0;
  for (std::size_t k : support) {
    const long x1 = static_cast<long>(k) % M, x2 = static_cast<long>(k) / M;
    const double* gx = &G[k * nc];
    double gx2 = 0.0;
    for (std::size_t c = 0; c < nc; ++c) gx2 += gx[c] * gx[c];
    mass += gx2;
    for (const auto& o : offsets) {
      const long y1 = x1 + o.d1, y2 = x2 + o.d2;
      if (y1 < 0 || y2 < 0 || y1 >= M || y2 >= M) {
        pairs += o.w * gx2;
      } else {
        const double* gy = &G[static_cast<std::size_t>(y2 * M + y1) * nc];
        double diff = 0.0;
        for (std::size_t c = 0; c < nc; ++c) diff += (gx[c] - gy[c]) * (gx[c] - gy[c]);
        pairs += o.w * diff;
      }
      const long z1 = x1 - o.d1, z2 = x2 - o.d2;
      if (z1 < 0 || z2 < 0 || z1 >= M || z2 >= M || !inside[static_cast<std::size_t>(z2 * M + z1)]) {
        const double* gz = (z1 < 0 || z2 < 0 || z1 >= M || z2 >= M) ? nullptr : &G[static_cast<std::size_t>(z2 * M + z1) * nc];
        double diff = 0.0;
        for (std::size_t c = 0; c < nc; ++c) {
          const double e = gx[c] - (gz ? gz[c] : 0.0);
          diff += e * e;
        }
        pairs += o.w * diff;
      }
    }
  }
  const double tail = 2.0 * h * h * mass * (std::numbers::pi / sigma) * std::pow(reach, -2.0 * sigma);

  // Excluded diagonal cell, Taylor-expanded over the disk of equal area.
  const double rho = h / std::sqrt(std::numbers::pi);
  const double shell = std::numbers::pi * std::pow(rho, 2.0 - 2.0 * sigma) / (2.0 - 2.0 * sigma);
  const double diagonal = shell * tensor_energy(g, m + 1);

  return base + std::sqrt(pairs + tail + diagonal);
}

std::array<double, 2> slobodeckij_sobolev_bracket(double s) {
  const int m = static_cast<int>(std::floor(s));
  const double sigma = s - m;
  const double A = sigma > 0.0 ? slobodeckij_constant(sigma) : 0.0;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double xi = std::pow(10.0, -4.0 + 8.0 * i / 4000.0);
    const double q = std::sqrt((1.0 + std::pow(xi, 2.0 * m) + 2.0 * A * std::pow(xi, 2.0 * s)) / std::pow(1.0 + xi * xi, s));
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  const double q0 = std::sqrt(m == 0 ? 2.0 : 1.0);
  lo = std::min(lo, q0);
  hi = std::max(hi, q0);
  return {lo, std::numbers::sqrt2 * hi};
}

NormReport uniformly_local_norm(const ScalarField& f, double s_or_p, const WindowFamily& windows, LocalKind kind) {
  if (!(f.grid() == windows.grid())) throw ConfigError("uniformly_local_norm: field and windows on different grids");
  const Grid2D& g = f.grid();
  if (kind == LocalKind::slobodeckij && g.n_side() > 128)
    throw ConfigError("W^{s,2}_ul quadrature is limited to n_side <= 128 (got " + std::to_string(g.n_side()) + ")");

  NormReport rep;
  rep.parameter = s_or_p;
  switch (kind) {
    case LocalKind::sobolev: rep.kind = "H_ul"; break;
    case LocalKind::homogeneous_sobolev: rep.kind = "H_ul_homogeneous"; break;
    case LocalKind::lebesgue: rep.kind = "L_ul"; break;
    case LocalKind::slobodeckij: rep.kind = "W_ul"; break;
  }
  const double fmax = f.max_abs();
  const std::size_t n = g.n_side();
  for (std::size_t c = 0; c < windows.centers().size(); ++c) {
    double value = 0.0;
    if (kind == LocalKind::lebesgue) {
      const double p = s_or_p;
      double acc = 0.0;
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t i1 = 0; i1 < n; ++i1) {
          const double w = windows.weight(c, g.coordinate(i1), g.coordinate(i2));
          if (w == 0.0) continue;
          const double a = std::abs(w * f.value(i1, i2));
          acc = std::isinf(p) ? std::max(acc, a) : acc + std::pow(a, p);
        }
      value = std::isinf(p) ? acc : std::pow(acc * g.cell_area(), 1.0 / p);
    } else if (fmax > 0.0) {
      const ScalarField box = extract_window(f, windows, c);
      if (box.max_abs() > 1e-14 * fmax) {
        value = kind == LocalKind::slobodeckij ? slobodeckij_norm(box, s_or_p)
                                               : sobolev_value(box, s_or_p, kind == LocalKind::homogeneous_sobolev);
      }
    }
    rep.profile.push_back(value);
  }
  rep.value = *std::max_element(rep.profile.begin(), rep.profile.end());
  rep.tested_range = std::to_string(windows.centers().size()) + " windows, scale " + std::to_string(windows.scale());
  return rep;
}

}  // namespace gsqg
