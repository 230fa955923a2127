#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "gsqg/error.hpp"
#include "gsqg/kernels.hpp"
#include "gsqg/multipliers.hpp"
#include "support.hpp"

using namespace gsqg;
using std::numbers::pi;

namespace {

ScalarField bump(const Grid2D& g, double x0, double y0, double s) {
  return ScalarField::sample(g, [=](double x, double y) {
    const double dx = x - x0, dy = y - y0;
    return std::exp(-(dx * dx + dy * dy) / (2 * s * s));
  });
}

// transform of a Phi at rho by an adaptive quadrature unrelated to the table
double a_phi_transform(double beta, double rho) {
  const double c = c_beta(beta);
  auto f = [&](double r) { return 2 * pi * cutoff_a(r) * c * std::pow(r, 1 - beta) * std::cyl_bessel_j(0.0, rho * r); };
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, 0.0, 1.0) + boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 1.0, 2.0, 15, 1e-14);
}

}  // namespace

TEST(Kernels, Constant) {
  // beta = 1/2: Gamma(1/4) / (2^{3/2} pi Gamma(3/4))
  EXPECT_NEAR(c_beta(0.5), std::tgamma(0.25) / (std::pow(2.0, 1.5) * pi * std::tgamma(0.75)), 1e-15);
  EXPECT_THROW(c_beta(1.0), DomainError);
}

TEST(Kernels, Preconditions) {
  EXPECT_THROW(build_split(Grid2D(64, 16.0), 0.5), ConfigError);
  EXPECT_THROW(build_split(Grid2D(128, 8.0), 0.5), ConfigError);
  EXPECT_THROW(build_split(Grid2D(128, 16.0), 1.2), DomainError);
}

TEST(Kernels, PointValues) {
  const double beta = 0.5, c = c_beta(beta);
  KernelSplit split(Grid2D(128, 16.0), beta, KernelRealization::sampled);
  const double x = 0.3, y = 0.4;  // |x| = 0.5
  const auto near = split.near_at(x, y);
  const double d = -c * beta * std::pow(0.5, -beta - 1) / 0.5;
  EXPECT_NEAR(near[0], -y * d, 1e-13);
  EXPECT_NEAR(near[1], x * d, 1e-13);
  const auto far = split.far_at(x, y);
  for (auto& row : far)
    for (double v : row) EXPECT_EQ(v, 0.0);
  const auto outside = split.near_at(1.5, 1.5);
  EXPECT_EQ(outside[0], 0.0);
  EXPECT_EQ(outside[1], 0.0);
  for (double r : {1.0, 0.7, 0.01}) EXPECT_EQ(split.far_radial(r)[0], 0.0);
}

TEST(Kernels, FarKernelIsHessianOfRadialProfile) {
  // compare against centered differences of grad_perp((1 - a) Phi)
  KernelSplit split(Grid2D(128, 16.0), 0.3, KernelRealization::sampled);
  auto vel = [&](double x, double y) {
    const double r = std::hypot(x, y);
    const double d = split.far_radial(r)[0] / r;
    return std::array<double, 2>{-y * d, x * d};
  };
  const double x = 1.2, y = -0.9, e = 1e-5;
  const auto M = split.far_at(x, y);
  for (int i = 0; i < 2; ++i) {
    EXPECT_NEAR(M[i][0], (vel(x + e, y)[i] - vel(x - e, y)[i]) / (2 * e), 1e-7);
    EXPECT_NEAR(M[i][1], (vel(x, y + e)[i] - vel(x, y - e)[i]) / (2 * e), 1e-7);
  }
}

TEST(Kernels, FarDecayExponent) {
  for (double beta : {0.25, 0.5, 0.75}) {
    KernelSplit split(Grid2D(256, 32.0), beta, KernelRealization::sampled);
    auto norm = [&](double r) {
      const auto M = split.far_at(r / std::sqrt(2.0), r / std::sqrt(2.0));
      return std::sqrt(M[0][0] * M[0][0] + M[0][1] * M[0][1] + M[1][0] * M[1][0] + M[1][1] * M[1][1]);
    };
    const double slope = std::log(norm(15.9) / norm(7.95)) / std::log(2.0);
    EXPECT_NEAR(slope, -(beta + 2), 0.05);
  }
}

TEST(Kernels, NearTransformMatchesIndependentQuadrature) {
  KernelSplit split(Grid2D(128, 16.0), 0.5);
  for (double rho : {0.0, 0.37, 3.3, 17.05, 30.0}) {
    const double ref = a_phi_transform(0.5, rho);
    EXPECT_NEAR(split.near_profile_transform(rho), ref, 1e-9 * std::max(1.0, std::abs(ref))) << rho;
  }
}

TEST(Kernels, NearL1Converges) {
  const double coarse = near_l1_quadrature(0.5, 1.0 / 32), fine = near_l1_quadrature(0.5, 1.0 / 64);
  EXPECT_LE(std::abs(coarse - fine) / fine, 0.02);
  // continuum value 2 pi int_0^2 |(a Phi)'| r dr, with r = t^2 to remove the singularity
  KernelSplit split(Grid2D(128, 16.0), 0.5, KernelRealization::sampled);
  auto integrand = [&](double t) { return 2 * pi * std::abs(split.near_radial(t * t)) * t * t * 2 * t; };
  const double exact = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 1.0, 15, 1e-13) +
                       boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 1.0, std::sqrt(2.0), 15,
                                                                                    1e-13);
  EXPECT_NEAR(fine / exact, 1.0, 0.01);
}

TEST(ConvolveNear, TrivialInputs) {
  auto split = build_split(Grid2D(128, 16.0), 0.5);
  Grid2D g = split.grid();
  EXPECT_EQ(convolve_near(split, ScalarField::zeros(g)).max_abs(), 0.0);
  EXPECT_LE(convolve_near(split, ScalarField::constant(g, 1.0)).max_abs(), 1e-10);
  auto sampled = build_split(g, 0.5, KernelRealization::sampled);
  EXPECT_LE(convolve_near(sampled, ScalarField::constant(g, 1.0)).max_abs(), 1e-10);
}

TEST(ConvolveNear, SampledMatchesBruteForce) {
  auto split = build_split(Grid2D(128, 16.0), 0.5, KernelRealization::sampled);
  const Grid2D& g = split.grid();
  auto theta = bump(g, 8.0, 8.0, 0.3);
  auto u = convolve_near(split, theta);
  const long n = 128, reach = 17;
  double err = 0, scale = u.max_abs();
  for (long i2 = 40; i2 < 88; i2 += 3)
    for (long i1 = 40; i1 < 88; i1 += 3) {
      std::array<double, 2> s{0, 0};
      for (long d2 = -reach; d2 <= reach; ++d2)
        for (long d1 = -reach; d1 <= reach; ++d1) {
          const auto k = split.near_at(d1 * g.spacing(), d2 * g.spacing());
          const double t = theta.value((i1 - d1 + n) % n, (i2 - d2 + n) % n);
          s[0] += k[0] * t * g.cell_area();
          s[1] += k[1] * t * g.cell_area();
        }
      err = std::max({err, std::abs(s[0] - u[0].value(i1, i2)), std::abs(s[1] - u[1].value(i1, i2))});
    }
  EXPECT_LE(err / scale, 1e-6);
}

TEST(ConvolveNear, SpectralMatchesContinuumQuadrature) {
  auto split = build_split(Grid2D(128, 16.0), 0.5);
  const Grid2D& g = split.grid();
  const double s = 0.5, x0 = 8.0, y0 = 8.0;
  auto theta = bump(g, x0, y0, s);
  auto u = convolve_near(split, theta);
  const RadialRule rule(2.0, 0.05);
  const int angles = 256;
  for (auto [i1, i2] : {std::pair{64, 64}, {70, 61}, {75, 80}, {52, 66}}) {
    const double x = g.coordinate(i1), y = g.coordinate(i2);
    std::array<double, 2> ref{0, 0};
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double r = rule.nodes[q];
      const double k = split.near_radial(r) * r * rule.weights[q] * (2 * pi / angles);
      for (int a = 0; a < angles; ++a) {
        const double phi = 2 * pi * a / angles;
        const double dx = x - r * std::cos(phi) - x0, dy = y - r * std::sin(phi) - y0;
        const double t = std::exp(-(dx * dx + dy * dy) / (2 * s * s));
        ref[0] += -std::sin(phi) * k * t;
        ref[1] += std::cos(phi) * k * t;
      }
    }
    EXPECT_NEAR(u[0].value(i1, i2), ref[0], 1e-8);
    EXPECT_NEAR(u[1].value(i1, i2), ref[1], 1e-8);
  }
}

TEST(ConvolveNear, BoundedByL1Norm) {
  auto split = build_split(Grid2D(128, 16.0), 0.5);
  const double l1 = split.near_l1();
  for (unsigned t = 0; t < 16; ++t) {
    auto theta = gsqg::testing::random_field(split.grid(), 200 + t);
    EXPECT_LE(convolve_near(split, theta).max_abs(), l1 * theta.max_abs());
  }
}

TEST(ConvolveFar, TrivialInputs) {
  auto split = build_split(Grid2D(128, 16.0), 0.5);
  const Grid2D& g = split.grid();
  auto theta = bump(g, 8, 8, 1.0);
  EXPECT_EQ(convolve_far(split, ScalarField::zeros(g), VectorField::constant(g, 1, 2)).max_abs(), 0.0);
  EXPECT_EQ(convolve_far(split, theta, VectorField::zeros(g)).max_abs(), 0.0);
}

TEST(ConvolveFar, ConstantInputsGiveKernelIntegral) {
  // int over 1 < |x| < R of far = [[0, pi beta C R^-beta], [-pi beta C R^-beta, 0]]
  const double beta = 0.5;
  auto split = build_split(Grid2D(512, 32.0), beta, KernelRealization::sampled);
  const Grid2D& g = split.grid();
  auto out = convolve_far(split, ScalarField::constant(g, 1.0), VectorField::constant(g, 0.3, -0.7));
  const auto samples = split.far_samples();
  std::array<std::array<double, 2>, 2> sum{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) sum[i][j] = samples[i][j].mean() * 32.0 * 32.0;
  EXPECT_NEAR(out[0].value(5, 9), sum[0][0] * 0.3 + sum[0][1] * -0.7, 1e-12);
  EXPECT_NEAR(out[1].value(5, 9), sum[1][0] * 0.3 + sum[1][1] * -0.7, 1e-12);
  const double analytic = pi * beta * c_beta(beta) * std::pow(16.0, -beta);
  EXPECT_NEAR(sum[0][1], analytic, 0.01 * analytic);
  EXPECT_NEAR(sum[1][0], -analytic, 0.01 * analytic);
  EXPECT_NEAR(sum[0][0], 0.0, 1e-12);
  EXPECT_LE(std::abs(sum[0][1]), split.far_tail_bound());
}

TEST(ConvolveFar, SampledMatchesBruteForce) {
  auto split = build_split(Grid2D(128, 16.0), 0.5, KernelRealization::sampled);
  const Grid2D& g = split.grid();
  auto theta = bump(g, 8.0, 8.0, 0.6);
  auto u = biot_savart_velocity(theta, 0.5);
  auto out = convolve_far(split, theta, u);
  auto p0 = dealiased_product(theta, u[0]), p1 = dealiased_product(theta, u[1]);
  const auto K = split.far_samples();
  const long n = 128;
  double err = 0;
  for (long i2 = 0; i2 < n; i2 += 21)
    for (long i1 = 0; i1 < n; i1 += 19) {
      std::array<double, 2> s{0, 0};
      for (long y2 = 0; y2 < n; ++y2)
        for (long y1 = 0; y1 < n; ++y1) {
          const auto d1 = static_cast<std::size_t>((i1 - y1 + n) % n), d2 = static_cast<std::size_t>((i2 - y2 + n) % n);
          const double a = p0.value(y1, y2), b = p1.value(y1, y2);
          for (int i = 0; i < 2; ++i) s[i] += (K[i][0].value(d1, d2) * a + K[i][1].value(d1, d2) * b) * g.cell_area();
        }
      err = std::max({err, std::abs(s[0] - out[0].value(i1, i2)), std::abs(s[1] - out[1].value(i1, i2))});
    }
  EXPECT_LE(err / out.max_abs(), 1e-5);
}

TEST(Split, NearPlusFarIsBiotSavart) {
  // The residual is set by the periodic box (images and the tapered far tail),
  // so it shrinks with L rather than with h. theta has zero mean and zero dipole moment.
  const double beta = 0.5;
  std::vector<double> errors;
  for (auto [n, L] : {std::pair<std::size_t, double>{256, 32.0}, {512, 16 * pi}}) {
    auto split = build_split(Grid2D(n, L), beta);
    const Grid2D& g = split.grid();
    const double c = L / 2;
    auto theta = bump(g, c, c, 0.7).scaled(2.0) - bump(g, c + 1.5, c, 0.7) - bump(g, c - 1.5, c, 0.7);
    theta = theta - ScalarField::constant(g, theta.mean());
    auto u = biot_savart_velocity(theta, beta);
    auto split_sum = convolve_near(split, theta) + convolve_far_velocity_sampled(split, theta);
    errors.push_back((split_sum - u).max_abs() / u.max_abs());
  }
  EXPECT_LE(errors[1], 1e-3);
  EXPECT_LT(errors[1], errors[0]);
}

TEST(Split, FractionalLaplacianOfNearKernelBounded) {
  // |xi|^{2-beta} A(xi) -> 1 at high frequency; its sup on the grid is attained at moderate rho
  auto split = build_split(Grid2D(256, 32.0), 0.5);
  const double top = split.grid().max_wavenumber();
  double low = 0, all = 0;
  for (double rho = 0.0; rho <= top; rho += 0.05) {
    const double v = std::pow(rho, 1.5) * std::abs(split.near_profile_transform(rho));
    all = std::max(all, v);
    if (rho <= top / 2) low = std::max(low, v);
  }
  EXPECT_TRUE(std::isfinite(all));
  EXPECT_EQ(all, low);
  EXPECT_NEAR(std::pow(top, 1.5) * split.near_profile_transform(top), 1.0, 0.05);
}
