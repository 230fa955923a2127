#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

#include "gsqg/error.hpp"
#include "gsqg/field.hpp"
#include "gsqg/field_io.hpp"
#include "support.hpp"

using namespace gsqg;
using gsqg::testing::random_field;

TEST(Grid, RejectsBadSizes) {
  EXPECT_THROW(Grid2D(12), ConfigError);
  EXPECT_THROW(Grid2D(4), ConfigError);
  EXPECT_THROW(Grid2D(16, -1.0), ConfigError);
  EXPECT_NO_THROW(Grid2D(16));
}

TEST(Grid, ModesAndWavenumbers) {
  Grid2D g(16, 4.0 * std::numbers::pi);
  EXPECT_EQ(g.mode(0), 0);
  EXPECT_EQ(g.mode(7), 7);
  EXPECT_EQ(g.mode(8), -8);
  EXPECT_EQ(g.mode(15), -1);
  EXPECT_DOUBLE_EQ(g.wavenumber(3), 1.5);
}

TEST(Transform, ConstantIsPureZeroMode) {
  Grid2D g(32);
  std::vector<double> v(g.size(), 2.5);
  auto f = ScalarField::from_values(g, v);
  EXPECT_NEAR(f.coefficient(0, 0).real(), 2.5, 1e-14);
  for (std::size_t k = 1; k < g.size(); ++k) EXPECT_LT(std::abs(f.coefficients()[k]), 1e-14);
}

TEST(Transform, PlaneWaveHasTwoCoefficients) {
  Grid2D g(32, 10.0);
  auto f = ScalarField::sample(g, [&](double x, double) { return std::cos(2 * std::numbers::pi * x / 10.0); });
  for (std::size_t i2 = 0; i2 < 32; ++i2)
    for (std::size_t i1 = 0; i1 < 32; ++i1) {
      const double expected = (i2 == 0 && (i1 == 1 || i1 == 31)) ? 0.5 : 0.0;
      EXPECT_NEAR(std::abs(f.coefficient(i1, i2)), expected, 1e-14);
    }
}

TEST(Transform, RoundTrip) {
  Grid2D g(64);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> v(g.size());
  for (auto& x : v) x = u(rng);
  auto f = ScalarField::from_values(g, v);
  auto back = inverse_transform(g, f.coefficients());
  double err = 0;
  for (std::size_t i = 0; i < v.size(); ++i) err = std::max(err, std::abs(back[i] - v[i]));
  EXPECT_LE(err, 1e-12);
}

TEST(Transform, Parseval) {
  for (unsigned seed = 0; seed < 5; ++seed) {
    Grid2D g(64, 7.0);
    auto f = ScalarField::sample(g, [&](double x, double y) { return std::exp(std::sin(x + seed) * std::cos(2 * y)); });
    double spectral = 0;
    for (auto c : f.coefficients()) spectral += std::norm(c);
    spectral *= g.box_length() * g.box_length();
    const double physical = f.l2_norm() * f.l2_norm();
    EXPECT_NEAR(physical / spectral, 1.0, 1e-10);
  }
}

TEST(Transform, Linearity) {
  Grid2D g(32);
  auto f = random_field(g, 1), h = random_field(g, 2);
  std::vector<double> combo(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) combo[i] = 2.0 * f.values()[i] - 3.0 * h.values()[i];
  auto c = forward_transform(g, std::span<const double>(combo));
  for (std::size_t k = 0; k < g.size(); ++k)
    EXPECT_LE(std::abs(c[k] - (2.0 * f.coefficients()[k] - 3.0 * h.coefficients()[k])), 1e-12);
}

TEST(Dealias, KeepsBandAndKillsNyquist) {
  Grid2D g(64);
  auto low = random_field(g, 5, g.dealias_mode_limit());
  EXPECT_LE((dealias(low) - low).max_abs(), 1e-14);
  auto nyq = ScalarField::sample(g, [&](double x, double) { return std::cos(32.0 * x); });
  EXPECT_GT(nyq.max_abs(), 0.9);
  EXPECT_LE(dealias(nyq).max_abs(), 1e-14);
}

TEST(Dealias, IdempotentOrthogonalProjection) {
  Grid2D g(64);
  auto f = random_field(g, 9, 32);
  auto h = random_field(g, 10, 32);
  auto pf = dealias(f);
  EXPECT_LE((dealias(pf) - pf).max_abs(), 1e-14);
  // <P f, h - P h> = 0 in the spectral inner product
  auto ph = dealias(h);
  cplx inner = 0;
  for (std::size_t k = 0; k < g.size(); ++k) inner += pf.coefficients()[k] * std::conj(h.coefficients()[k] - ph.coefficients()[k]);
  EXPECT_LT(std::abs(inner), 1e-14);
}

TEST(FieldIO, BinaryRoundTrip) {
  Grid2D g(16, 3.0);
  auto a = random_field(g, 1), b = random_field(g, 2);
  auto path = std::filesystem::temp_directory_path() / "gsqg_field_io_test.fld";
  write_field_binary(path, VectorField(a, b));
  EXPECT_EQ(std::filesystem::file_size(path), 24 + 2 * 16 * 16 * 8);
  auto back = read_field_binary(path);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].grid(), g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(back[0].values()[i], a.values()[i]);
    EXPECT_EQ(back[1].values()[i], b.values()[i]);
  }
  std::filesystem::remove(path);
}
