#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "gsqg/ensemble.hpp"
#include "gsqg/error.hpp"
#include "gsqg/gronwall.hpp"
#include "gsqg/multipliers.hpp"
#include "gsqg/verify.hpp"

using namespace gsqg;
using std::numbers::pi;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = a + (b - a) * double(k) / double(n - 1);
  return t;
}

// Trajectory that only carries norm samples.
Trajectory norm_trajectory(const std::vector<double>& t, const std::vector<std::pair<std::string, std::vector<double>>>& s) {
  Trajectory tr;
  for (std::size_t k = 0; k < t.size(); ++k)
    for (const auto& [label, v] : s) tr.norms.push_back({t[k], label, v[k]});
  tr.times = t;
  return tr;
}

}  // namespace

// --- report verdicts

TEST(Report, CeilingAndStability) {
  VerificationReport r;
  r.measured = {{"n64", 0, 1.0}, {"n64", 1, 2.0}, {"n128", 2, 1.5}, {"n128", 3, 2.2}};
  finalize(r, 3.0);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_NEAR(r.stability, 0.2 / 2.2, 1e-12);
  finalize(r, 2.1);
  EXPECT_EQ(r.verdict, Verdict::fail);
  r.measured.back().ratio = 5.0;
  finalize(r, 10.0);
  EXPECT_EQ(r.verdict, Verdict::fail);  // 2.0 vs 5.0 varies by 60%
}

TEST(Report, EmptyPassesVacuously) {
  VerificationReport r;
  finalize(r, 1.0);
  EXPECT_EQ(r.verdict, Verdict::pass);
}

TEST(Report, OutlierGuard) {
  VerificationReport r;
  for (std::size_t i = 0; i < 16; ++i) r.measured.push_back({"n64", i, 1.0});
  r.measured.push_back({"n64", 16, 11.0});
  finalize(r, 100.0);
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Report, SeriesAreComparedSeparately) {
  VerificationReport r;
  // each series is stable across groups although the two differ by 10x
  r.measured = {{"a", 0, 1.0, "x"}, {"b", 1, 1.1, "x"}, {"a", 2, 10.0, "y"}, {"b", 3, 10.5, "y"}};
  finalize(r, 20.0);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_LT(r.stability, 0.1);
  EXPECT_EQ(r.series().size(), 2u);
}

TEST(Report, SignedSeriesVariation) {
  EXPECT_NEAR(relative_variation({-1.0, -1.1}), 0.1 / 1.1, 1e-12);
  EXPECT_NEAR(relative_variation({-1.0, 1.0}), 2.0, 1e-12);
  EXPECT_EQ(relative_variation({0.0, 0.0}), 0.0);
  VerificationReport r;
  r.measured = {{"a", 0, -0.010}, {"b", 1, -0.002}};
  finalize(r, inf);
  EXPECT_EQ(r.verdict, Verdict::fail);
}

TEST(Report, BracketAndSpread) {
  VerificationReport r;
  r.measured = {{"a", 0, 0.8}, {"a", 1, 1.2}, {"b", 2, 0.8}, {"b", 3, 1.2}};
  finalize_bracket(r, 0.5, 1.5);
  EXPECT_EQ(r.verdict, Verdict::pass);
  finalize_bracket(r, 0.9, 1.5);
  EXPECT_EQ(r.verdict, Verdict::fail);
  finalize_spread(r, 1.6);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_NEAR(r.spread(), 1.5, 1e-12);
  finalize_spread(r, 1.4);
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_NE(summary_line(r).find("spread="), std::string::npos);
}

// --- Gronwall utilities

TEST(Gronwall, TrapezoidIsExactOnLines) {
  const auto t = linspace(0, 2, 9);
  std::vector<double> y;
  for (double s : t) y.push_back(3 * s + 1);
  const auto I = cumulative_trapezoid(t, y);
  for (std::size_t k = 0; k < t.size(); ++k) EXPECT_NEAR(I[k], 1.5 * t[k] * t[k] + t[k], 1e-12);
}

TEST(Gronwall, BoundIsTightForConstantRate) {
  // u' = b u with u(0) = a solves u = a + int b u; the bound is a exp(b t)
  const auto t = linspace(0, 1, 201);
  const auto bound = gronwall_bound(t, std::vector<double>(t.size(), 2.0), std::vector<double>(t.size(), 1.5));
  for (std::size_t k = 0; k < t.size(); ++k) EXPECT_NEAR(bound[k], 2.0 * std::exp(1.5 * t[k]), 1e-12 * bound[k]);
}

TEST(Gronwall, DiscreteEnvelopeDominates) {
  std::vector<double> alpha{1, 1, 1.2, 1.3, 1.3, 2}, w{0.1, 0.3, 0.0, 0.5, 0.2, 0.1};
  const auto y = discrete_gronwall_envelope(alpha, w);
  // any sequence satisfying the recursive inequality stays below
  std::vector<double> u(alpha.size());
  for (std::size_t n = 0; n < u.size(); ++n) {
    double acc = alpha[n];
    for (std::size_t k = 0; k < n; ++k) acc += w[k] * u[k];
    u[n] = 0.9 * acc;
    EXPECT_LE(u[n], y[n]);
  }
  // equality case reproduces the envelope
  EXPECT_DOUBLE_EQ(y[0], 1.0);
  EXPECT_NEAR(y[1], 1.0 + 0.1, 1e-15);
}

TEST(Gronwall, MinimalConstant) {
  const auto t = linspace(0, 1, 101);
  std::vector<double> g(t.size(), 2.0), flat(t.size(), 3.0), grow(t.size());
  EXPECT_EQ(minimal_gronwall_constant(t, flat, g), 0.0);
  for (std::size_t k = 0; k < t.size(); ++k) grow[k] = 3.0 * std::exp(0.7 * 2.0 * t[k]);
  EXPECT_NEAR(minimal_gronwall_constant(t, grow, g), 0.7, 1e-10);
  // growth without integrated rate cannot be bounded
  std::vector<double> zero(t.size(), 0.0);
  EXPECT_TRUE(std::isinf(minimal_gronwall_constant(t, grow, zero)));
}

TEST(Gronwall, RationalConstant) {
  const auto t = linspace(0, 0.5, 51);
  EXPECT_DOUBLE_EQ(fit_rational_bound_constant(t, std::vector<double>(t.size(), 2.0)), 1.0);
  const double C = 1.5, psi0 = 0.8;
  // the bound curve itself, started from psi0
  std::vector<double> exact;
  for (double s : t) exact.push_back(C * psi0 / (1 - C * s * psi0));
  exact.front() = psi0;
  EXPECT_NEAR(fit_rational_bound_constant(t, exact), C, 1e-12);
  EXPECT_TRUE(std::isinf(rational_bound(2.0, 1.0, 0.5)));
  EXPECT_THROW(fit_rational_bound_constant(t, std::vector<double>(t.size(), 0.0)), DomainError);
}

// --- norms and single modes

TEST(Verify, LebesgueNorms) {
  const Grid2D g(64);
  const ScalarField f = ScalarField::sample(g, [](double x, double) { return std::cos(x); });
  EXPECT_NEAR(lp_norm(f, 2.0), std::sqrt(2 * pi * pi), 1e-10);
  EXPECT_NEAR(lp_norm(f, inf), 1.0, 1e-12);
  EXPECT_THROW(lp_norm(f, 0.5), DomainError);
  const VectorField v{f, f};
  EXPECT_NEAR(lp_norm(v, inf), std::sqrt(2.0), 1e-12);
}

TEST(Verify, SingleModesGiveUnitRatios) {
  for (auto variant : {MultiplierBound::bernstein, MultiplierBound::lemma_3_1, MultiplierBound::lemma_A_2})
    for (double p : {2.0, inf})
      for (double beta : {0.25, 0.5, 0.75}) {
        CheckParams params;
        params.p = p;
        params.beta = beta;
        const auto r = single_mode_ratios(variant, params, 128);
        ASSERT_GE(r.size(), 4u);
        for (double x : r) EXPECT_NEAR(x, 1.0, 1e-10) << check_id(variant) << " p=" << p << " beta=" << beta;
      }
}

TEST(Verify, CommutatorVanishesWithoutVelocity) {
  const Grid2D g(64);
  const DyadicFamily fam = build_partition(g);
  const ScalarField th = random_band_limited(g, 5, 2.5, 8);
  for (int j = -1; j <= fam.j_max(); ++j)
    EXPECT_LE(block_commutator(VectorField::zeros(g), th, fam, j).max_abs(), 1e-14);
}

TEST(Verify, MultiplierCheckPassesOnSmallGrids) {
  for (auto variant : {MultiplierBound::bernstein, MultiplierBound::lemma_3_1, MultiplierBound::lemma_A_2}) {
    CheckParams p = default_params(check_id(variant));
    p.grids = {64, 128};
    const auto r = check_multiplier_bounds(variant, p, default_ensemble(check_id(variant)));
    EXPECT_EQ(r.verdict, Verdict::pass) << summary_line(r);
    EXPECT_GE(r.measured.size(), 16u);
  }
}

TEST(Verify, ChecksAreDeterministic) {
  CheckParams p = default_params("lemma_A_3");
  p.grids = {64, 128};
  const auto a = run_check("lemma_A_3", p, default_ensemble("lemma_A_3"));
  const auto b = run_check("lemma_A_3", p, default_ensemble("lemma_A_3"));
  ASSERT_EQ(a.measured.size(), b.measured.size());
  for (std::size_t i = 0; i < a.measured.size(); ++i) EXPECT_EQ(a.measured[i].ratio, b.measured[i].ratio);
}

TEST(Verify, UnknownCheckIsRejected) {
  EXPECT_THROW(run_check("no_such_check", CheckParams{}, EnsembleSpec{}), ConfigError);
  EXPECT_THROW(default_params("no_such_check"), ConfigError);
  for (const auto& id : known_checks()) EXPECT_NO_THROW(default_params(id));
}

// --- a priori bounds on synthetic trajectories

TEST(Apriori, MissingNormIsAConfigError) {
  const auto t = linspace(0, 1, 5);
  const auto tr = norm_trajectory(t, {{"u_linf", std::vector<double>(5, 1.0)}});
  EXPECT_THROW(check_apriori_bounds({{"n64", tr}}, AprioriBound::holder_bound, CheckParams{}), ConfigError);
}

TEST(Apriori, ConservedNormGivesZeroConstant) {
  CheckParams p;
  p.s = 2.5;
  const auto labels = required_norms(AprioriBound::hsul_theorem_3_4, p);
  const auto t = linspace(0, 0.1, 11);
  std::vector<std::pair<std::string, Trajectory>> runs;
  for (const char* name : {"n256", "n512"})
    runs.emplace_back(name, norm_trajectory(t, {{labels[0].label(), std::vector<double>(11, 2.0)},
                                                {labels[1].label(), std::vector<double>(11, 1.0)},
                                                {labels[2].label(), std::vector<double>(11, 1.0)}}));
  const auto r = check_apriori_bounds(runs, AprioriBound::hsul_theorem_3_4, p);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.max_ratio(), 0.0);
}

TEST(Apriori, ZeroDataPassVacuously) {
  CheckParams p;
  const auto t = linspace(0, 0.1, 6);
  const std::vector<double> z(6, 0.0);
  for (auto v : {AprioriBound::hsul_theorem_3_4, AprioriBound::holder_bound, AprioriBound::velocity_hsul}) {
    std::vector<std::pair<std::string, std::vector<double>>> s;
    for (const auto& d : required_norms(v, p)) s.emplace_back(d.label(), z);
    const auto r = check_apriori_bounds({{"n64", norm_trajectory(t, s)}}, v, p);
    EXPECT_EQ(r.verdict, Verdict::pass) << check_id(v);
    EXPECT_GT(r.skipped, 0u);
  }
}

TEST(Apriori, HolderBoundWarnsPastThePole) {
  CheckParams p;
  const auto labels = required_norms(AprioriBound::holder_bound, p);
  // psi doubles by t = 1 with psi0 = 1: C >= 1, and 1 / (t psi0) = 1 is reached
  const auto t = linspace(0, 1, 11);
  std::vector<double> u(11, 0.0), th;
  for (double s : t) th.push_back(1.0 + s * s * 3.0);
  const auto r =
      check_apriori_bounds({{"n64", norm_trajectory(t, {{labels[0].label(), u}, {labels[1].label(), th}})}},
                           AprioriBound::holder_bound, p);
  EXPECT_EQ(r.verdict, Verdict::warning) << summary_line(r);
}

TEST(Apriori, StationaryRadialRunHasNoGrowth) {
  CheckParams p = default_params("hsul_theorem_3_4");
  p.grids = {128};
  p.L = 32.0;
  const Grid2D g(128, 32.0);
  const ScalarField th = radial_gaussian(g, 1.5);
  SolverConfig c = experiment_config(p, 128);
  c.dt = 0.01;
  c.t_end = 0.05;
  c.sample_interval = 0.01;
  c.record_norms = required_norms(AprioriBound::holder_bound, p);
  const auto r = check_apriori_bounds({{"n128", simulate(c, th, biot_savart_velocity(th, p.beta))}},
                                      AprioriBound::holder_bound, p);
  EXPECT_EQ(r.verdict, Verdict::pass) << summary_line(r);
  EXPECT_NEAR(r.max_ratio(), 1.0, 1e-6);
}

// --- twin runs

TEST(Twin, LinearRegimeIsStableAcrossDelta) {
  const Grid2D g(64, 16.0);
  const ScalarField th = random_compact_bump(g, 2);
  ScalarField pert = random_compact_bump(g, 9);
  pert = pert.scaled(1.0 / pert.max_abs());
  CheckParams p = default_params("twin_run");
  SolverConfig c = experiment_config(p, 64);
  c.dt = 0.01;
  c.t_end = 0.1;
  c.sample_interval = 0.02;
  const auto r = check_twin_run(c, th, pert, {1e-3, 1e-4, 1e-5});
  EXPECT_EQ(r.verdict, Verdict::pass) << summary_line(r);
  EXPECT_EQ(r.measured.size(), 6u);
  for (const auto& t : r.measured)
    if (t.series == "K") EXPECT_GE(t.ratio, 1.0 - 1e-6);  // e(0) = delta (||pert||_inf = 1) plus the velocity part
}
