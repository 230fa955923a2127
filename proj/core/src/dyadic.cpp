#include "gsqg/dyadic.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <string>

#include "gsqg/error.hpp"
#include "gsqg/profiles.hpp"

namespace gsqg {

DyadicFamily::DyadicFamily(const Grid2D& grid) : grid_(grid) {
  const double k0 = grid.fundamental_wavenumber();
  const double cutoff = grid.dealias_wavenumber();
  const double kmax = grid.max_wavenumber();
  auto top = [](int j) { return 2.0 * outer_radius * std::ldexp(1.0, j); };
  j_max_ = -64;
  while (top(j_max_ + 1) <= cutoff) ++j_max_;
  j_min_homogeneous_ = -64;
  while (top(j_min_homogeneous_) <= k0) ++j_min_homogeneous_;
  j_top_ = -1;
  while (inner_radius * std::ldexp(1.0, j_top_ + 1) < kmax) ++j_top_;
}

double DyadicFamily::chi_hat(double r) { return plateau(r, inner_radius, outer_radius); }

double DyadicFamily::phi_hat(double r) { return chi_hat(0.5 * r) - chi_hat(r); }

double DyadicFamily::symbol(int j, BlockMode mode, double r) const {
  switch (mode) {
    case BlockMode::inhomogeneous:
      return j == -1 ? chi_hat(r) : phi_hat(std::ldexp(r, -j));
    case BlockMode::homogeneous:
      return phi_hat(std::ldexp(r, -j));
    case BlockMode::lowpass:
      return chi_hat(std::ldexp(r, -(j + 1)));
  }
  return 0.0;
}

DyadicFamily build_partition(const Grid2D& grid) {
  DyadicFamily family(grid);
  if (family.j_max() < 0)
    throw ConfigError("grid too coarse: no dyadic annulus fits below the dealiasing cutoff");
  return family;
}

ScalarField project_block(const ScalarField& f, const DyadicFamily& family, int j, BlockMode mode) {
  if (!(f.grid() == family.grid())) throw ConfigError("project_block: field and partition on different grids");
  const int lo = mode == BlockMode::homogeneous ? family.j_min_homogeneous() : -1;
  const bool too_high = mode != BlockMode::lowpass && j > family.j_top();
  if (j < lo || too_high) throw RangeError("block index " + std::to_string(j) + " outside realizable range");
  if (mode == BlockMode::lowpass && j >= family.j_top()) return f;
  return apply_radial_symbol(f, [&](double r) { return family.symbol(j, mode, r); });
}

ScalarField smooth_truncate_initial(const ScalarField& f, const DyadicFamily& family, int n) {
  if (n < 0) throw RangeError("smooth_truncate_initial: n must be nonnegative");
  return project_block(f, family, n, BlockMode::lowpass);
}

void export_profiles_csv(const std::filesystem::path& path, double r_max, std::size_t samples) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string());
  os << "radius,chi_hat,phi_hat\n" << std::setprecision(17);
  for (std::size_t i = 0; i < samples; ++i) {
    const double r = r_max * static_cast<double>(i) / static_cast<double>(samples - 1);
    os << r << ',' << DyadicFamily::chi_hat(r) << ',' << DyadicFamily::phi_hat(r) << '\n';
  }
}

}  // namespace gsqg
