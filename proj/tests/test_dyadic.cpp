#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gsqg/dyadic.hpp"
#include "gsqg/error.hpp"
#include "support.hpp"

using namespace gsqg;
using gsqg::testing::random_field;

TEST(Profiles, SupportsAndValues) {
  EXPECT_EQ(DyadicFamily::chi_hat(0.0), 1.0);
  EXPECT_EQ(DyadicFamily::phi_hat(1.0), 1.0);
  for (double r = 0.0; r < 3.0; r += 1e-3) {
    const double c = DyadicFamily::chi_hat(r), p = DyadicFamily::phi_hat(r);
    EXPECT_GE(c, 0.0);
    EXPECT_GE(p, 0.0);
    if (r >= 5.0 / 6.0) EXPECT_EQ(c, 0.0);
    if (r <= 3.0 / 5.0 || r >= 5.0 / 3.0) EXPECT_EQ(p, 0.0);
  }
}

TEST(Partition, ResidualAtRandomWavenumbers) {
  Grid2D g(256);
  auto fam = build_partition(g);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> m(-127, 127);
  for (int t = 0; t < 512; ++t) {
    const double r = std::hypot(double(m(rng)), double(m(rng))) * g.fundamental_wavenumber();
    double s = DyadicFamily::chi_hat(r);
    for (int j = 0; j <= fam.j_top(); ++j) s += DyadicFamily::phi_hat(std::ldexp(r, -j));
    EXPECT_LE(std::abs(1.0 - s), 1e-12);
  }
}

TEST(Partition, RangesOnStandardGrids) {
  auto fam = build_partition(Grid2D(256));
  EXPECT_EQ(fam.j_min_homogeneous(), 0);
  EXPECT_EQ(fam.j_max(), 5);
  EXPECT_GE(0.625 * std::ldexp(1.0, fam.j_top() + 1), Grid2D(256).max_wavenumber());
  EXPECT_THROW(build_partition(Grid2D(8, 100.0)), ConfigError);
}

TEST(ProjectBlock, UnitModeAndConstant) {
  Grid2D g(64);
  auto fam = build_partition(g);
  auto wave = ScalarField::sample(g, [](double x, double) { return std::cos(x); });
  EXPECT_LE((project_block(wave, fam, 0, BlockMode::inhomogeneous) - wave).max_abs(), 1e-15);
  auto c = ScalarField::constant(g, 3.0);
  EXPECT_LE((project_block(c, fam, -1, BlockMode::inhomogeneous) - c).max_abs(), 1e-15);
  for (int j = 0; j <= fam.j_top(); ++j) EXPECT_EQ(project_block(c, fam, j, BlockMode::inhomogeneous).max_abs(), 0.0);
}

TEST(ProjectBlock, RangeErrors) {
  Grid2D g(64);
  auto fam = build_partition(g);
  auto f = random_field(g, 1);
  EXPECT_THROW(project_block(f, fam, -2, BlockMode::inhomogeneous), RangeError);
  EXPECT_THROW(project_block(f, fam, fam.j_top() + 1, BlockMode::inhomogeneous), RangeError);
  EXPECT_THROW(project_block(f, fam, fam.j_min_homogeneous() - 1, BlockMode::homogeneous), RangeError);
  EXPECT_THROW(smooth_truncate_initial(f, fam, -1), RangeError);
}

TEST(ProjectBlock, Reconstruction) {
  Grid2D g(128);
  auto fam = build_partition(g);
  auto f = random_field(g, 4);
  auto sum = ScalarField::zeros(g);
  for (int j = -1; j <= fam.j_top(); ++j) sum = sum + project_block(f, fam, j, BlockMode::inhomogeneous);
  EXPECT_LE((sum - f).max_abs(), 1e-10);
}

TEST(ProjectBlock, SeparatedBlocksAreOrthogonal) {
  Grid2D g(128);
  auto fam = build_partition(g);
  auto f = random_field(g, 8);
  for (int j = -1; j <= fam.j_max(); ++j)
    for (int k = j + 2; k <= fam.j_max(); ++k) {
      auto jk = project_block(project_block(f, fam, k, BlockMode::inhomogeneous), fam, j, BlockMode::inhomogeneous);
      EXPECT_LE(jk.max_abs(), 1e-12) << j << "," << k;
    }
}

TEST(ProjectBlock, LinearAndShiftEquivariant) {
  Grid2D g(64);
  auto fam = build_partition(g);
  auto f = random_field(g, 2), h = random_field(g, 3);
  auto lhs = project_block(2.0 * f - h, fam, 2, BlockMode::homogeneous);
  auto rhs = 2.0 * project_block(f, fam, 2, BlockMode::homogeneous) - project_block(h, fam, 2, BlockMode::homogeneous);
  EXPECT_LE((lhs - rhs).max_abs(), 1e-12);

  auto shift = [&](const ScalarField& x, std::size_t s1, std::size_t s2) {
    std::vector<double> v(g.size());
    for (std::size_t i2 = 0; i2 < 64; ++i2)
      for (std::size_t i1 = 0; i1 < 64; ++i1) v[g.index(i1, i2)] = x.value((i1 + s1) % 64, (i2 + s2) % 64);
    return ScalarField::from_values(g, v);
  };
  auto a = project_block(shift(f, 5, 11), fam, 1, BlockMode::inhomogeneous);
  auto b = shift(project_block(f, fam, 1, BlockMode::inhomogeneous), 5, 11);
  EXPECT_LE((a - b).max_abs(), 1e-12);
}

TEST(SmoothTruncate, Limits) {
  Grid2D g(64);
  auto fam = build_partition(g);
  auto f = random_field(g, 6);
  EXPECT_LE((smooth_truncate_initial(f, fam, fam.j_top() + 3) - f).max_abs(), 1e-15);
  auto high = ScalarField::sample(g, [](double x, double y) { return std::sin(3 * x + 2 * y); });
  EXPECT_LE(smooth_truncate_initial(high, fam, 0).max_abs(), 1e-15);
}

TEST(SmoothTruncate, TelescopesToBlockSum) {
  Grid2D g(64);
  auto fam = build_partition(g);
  auto f = random_field(g, 7);
  for (int n = 0; n < fam.j_top(); ++n) {
    auto sum = ScalarField::zeros(g);
    for (int j = -1; j <= n; ++j) sum = sum + project_block(f, fam, j, BlockMode::inhomogeneous);
    EXPECT_LE((sum - smooth_truncate_initial(f, fam, n)).max_abs(), 1e-12);
  }
}
