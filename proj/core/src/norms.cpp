#include "gsqg/norms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <stdexcept>

#include "gsqg/multipliers.hpp"

namespace gsqg {
namespace {

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// ||m(xi) f||_inf for a real radial symbol; skips the real-field projection
// since a real even symbol keeps the coefficients conjugate symmetric.
double radial_sup(const ScalarField& f, const std::function<double(double)>& symbol) {
  const Grid2D& g = f.grid();
  const std::size_t n = g.n_side();
  std::vector<cplx> c(f.coefficients().begin(), f.coefficients().end());
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    const double xi2 = g.wavenumber(i2);
    for (std::size_t i1 = 0; i1 < n; ++i1) c[g.index(i1, i2)] *= symbol(std::hypot(g.wavenumber(i1), xi2));
  }
  return max_abs(inverse_transform(g, c));
}

// L^2 Sum_k w(|xi_k|) |c_k|^2
double weighted_energy(const ScalarField& f, const std::function<double(double)>& weight) {
  const Grid2D& g = f.grid();
  const std::size_t n = g.n_side();
  double s = 0.0;
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    const double xi2 = g.wavenumber(i2);
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      const std::size_t k = g.index(i1, i2);
      s += weight(std::hypot(g.wavenumber(i1), xi2)) * std::norm(f.coefficients()[k]);
    }
  }
  return s * g.box_length() * g.box_length();
}

std::string range_text(int lo, int hi) { return "j=" + std::to_string(lo) + ".." + std::to_string(hi); }

}  // namespace

NormReport zygmund_norm(const ScalarField& f, double r, const DyadicFamily& family, bool homogeneous) {
  NormReport rep;
  rep.kind = homogeneous ? "zygmund_homogeneous" : "zygmund";
  rep.parameter = r;
  const int lo = homogeneous ? family.j_min_homogeneous() : -1;
  const BlockMode mode = homogeneous ? BlockMode::homogeneous : BlockMode::inhomogeneous;
  rep.first_block = lo;
  for (int j = lo; j <= family.j_top(); ++j) {
    const double block = radial_sup(f, [&](double rad) { return family.symbol(j, mode, rad); });
    rep.profile.push_back(homogeneous ? block : std::pow(2.0, j * r) * block);
  }
  rep.value = *std::max_element(rep.profile.begin(), rep.profile.end());
  rep.tested_range = range_text(lo, family.j_top());
  return rep;
}

double sup_derivative_sum(const ScalarField& f, int m) {
  double total = 0.0;
  for (int order = 0; order <= m; ++order)
    for (int a1 = 0; a1 <= order; ++a1) total += derivative(f, a1, order - a1).max_abs();
  return total;
}

double holder_seminorm(const ScalarField& f, double sigma) {
  const Grid2D& g = f.grid();
  const long n = static_cast<long>(g.n_side());
  const std::size_t mask = g.n_side() - 1;
  const auto v = f.values();
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double osc = *hi - *lo;
  if (osc == 0.0) return 0.0;

  // Half the offsets suffice: (x, x + d) and (x + d, x) are the same pair.
  struct Offset {
    long d1, d2;
    double radius;
  };
  std::vector<Offset> offsets;
  for (long d2 = 0; d2 <= n / 2; ++d2)
    for (long d1 = -n / 2 + 1; d1 <= n / 2; ++d1) {
      if (d2 == 0 && d1 <= 0) continue;
      offsets.push_back({d1, d2, g.spacing() * std::hypot(double(d1), double(d2))});
    }
  std::sort(offsets.begin(), offsets.end(), [](const Offset& a, const Offset& b) { return a.radius < b.radius; });

  double best = 0.0;
  for (const auto& o : offsets) {
    const double scale = std::pow(o.radius, -sigma);
    if (osc * scale <= best) break;
    double diff = 0.0;
    for (std::size_t i2 = 0; i2 < g.n_side(); ++i2) {
      const double* row = &v[i2 * g.n_side()];
      const double* other = &v[((i2 + static_cast<std::size_t>(o.d2)) & mask) * g.n_side()];
      const std::size_t shift = static_cast<std::size_t>(o.d1 + n) & mask;
      for (std::size_t i1 = 0; i1 < g.n_side(); ++i1) diff = std::max(diff, std::abs(row[i1] - other[(i1 + shift) & mask]));
    }
    best = std::max(best, diff * scale);
  }
  return best;
}

NormReport classical_holder_norm(const ScalarField& f, double r) {
  if (r < 0.0) throw std::invalid_argument("classical_holder_norm: r must be nonnegative");
  NormReport rep;
  rep.kind = "holder";
  rep.parameter = r;
  const int m = static_cast<int>(std::floor(r));
  const double sigma = r - m;
  rep.value = sup_derivative_sum(f, m);
  if (sigma > 0.0) {
    for (int a1 = 0; a1 <= m; ++a1) {
      const double semi = holder_seminorm(derivative(f, a1, m - a1), sigma);
      rep.profile.push_back(semi);
      rep.value += semi;
    }
  }
  rep.tested_range = "all grid pairs";
  return rep;
}

double sobolev_value(const ScalarField& f, double s, bool homogeneous) {
  return std::sqrt(weighted_energy(f, [&](double r) {
    return homogeneous ? (r == 0.0 ? 0.0 : std::pow(r, 2.0 * s)) : std::pow(1.0 + r * r, s);
  }));
}

NormReport sobolev_norm(const ScalarField& f, double s, bool homogeneous) {
  NormReport rep;
  rep.kind = homogeneous ? "sobolev_homogeneous" : "sobolev";
  rep.parameter = s;
  rep.value = sobolev_value(f, s, homogeneous);

  const DyadicFamily family(f.grid());
  const int lo = homogeneous ? family.j_min_homogeneous() : -1;
  const BlockMode mode = homogeneous ? BlockMode::homogeneous : BlockMode::inhomogeneous;
  rep.first_block = lo;
  double sum = 0.0;
  for (int j = lo; j <= family.j_top(); ++j) {
    const double e = weighted_energy(f, [&](double r) {
      const double p = family.symbol(j, mode, r);
      return p * p;
    });
    const double w = std::pow(2.0, 2.0 * j * s) * e;
    rep.profile.push_back(std::sqrt(w));
    sum += w;
  }
  rep.alternate = std::sqrt(sum);
  rep.tested_range = range_text(lo, family.j_top());
  return rep;
}

void write_norm_reports_csv(const std::filesystem::path& path, const std::vector<NormReport>& reports) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string());
  os << "kind,param,value\n" << std::setprecision(17);
  for (const auto& r : reports) os << r.kind << ',' << r.parameter << ',' << r.value << '\n';
}

}  // namespace gsqg
