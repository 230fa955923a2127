// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the number of failures.
//
//   gsqg_acceptance            all criteria
//   gsqg_acceptance 3 9        a subset

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "gsqg/dyadic.hpp"
#include "gsqg/ensemble.hpp"
#include "gsqg/fundamental_solution.hpp"
#include "gsqg/multipliers.hpp"
#include "gsqg/picard.hpp"
#include "gsqg/radial.hpp"
#include "gsqg/solver.hpp"
#include "gsqg/verify.hpp"

using namespace gsqg;
using std::numbers::pi;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [x]");
  }
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double rel(const ScalarField& a, const ScalarField& b) { return (a - b).max_abs() / std::max(b.max_abs(), 1e-300); }

// ---------------------------------------------------------------------------

Outcome partition_of_unity() {
  const Grid2D g(256);
  const DyadicFamily fam = build_partition(g);
  double worst = 0.0;
  for (std::size_t i2 = 0; i2 < g.n_side(); ++i2)
    for (std::size_t i1 = 0; i1 < g.n_side(); ++i1) {
      const double r = std::hypot(g.wavenumber(i1), g.wavenumber(i2));
      double s = fam.symbol(-1, BlockMode::inhomogeneous, r);
      for (int j = 0; j <= fam.j_top(); ++j) s += fam.symbol(j, BlockMode::inhomogeneous, r);
      worst = std::max(worst, std::abs(1.0 - s));
    }
  // the blocks of a field add back up to it
  const ScalarField f = random_band_limited(g, 11);
  ScalarField sum = project_block(f, fam, -1, BlockMode::inhomogeneous);
  for (int j = 0; j <= fam.j_top(); ++j) sum = sum + project_block(f, fam, j, BlockMode::inhomogeneous);
  Outcome o;
  o.require(worst <= 1e-12, fmt("symbol residual %.2e", worst));
  const double field = rel(sum, f);
  o.require(field <= 1e-12, fmt("field residual %.2e", field));
  return o;
}

// cos(a x1 + b x2) from its two Fourier coefficients: sampling the cosine
// leaves 1e-16 noise in every mode, which s = 2.7 lifts above 1e-12.
ScalarField exact_cosine(const Grid2D& g, int a, int b) {
  const long n = long(g.n_side());
  std::vector<cplx> c(g.size());
  auto wrap = [n](long m) { return std::size_t((m % n + n) % n); };
  c[g.index(wrap(a), wrap(b))] += 0.5;
  c[g.index(wrap(-a), wrap(-b))] += 0.5;
  return ScalarField::from_coefficients(g, std::move(c));
}

Outcome plane_wave_multipliers() {
  const Grid2D g(64);
  double worst = 0.0;
  const std::vector<std::pair<int, int>> modes{{1, 0}, {3, 4}, {0, 7}, {-5, 12}, {16, 9}};
  for (auto [a, b] : modes) {
    const double k = std::hypot(double(a), double(b));
    const ScalarField c = exact_cosine(g, a, b);
    const ScalarField s = ScalarField::sample(g, [=](double x, double y) { return std::sin(a * x + b * y); });
    for (double sigma : {-1.3, 0.4, 1.0, 2.7}) {
      worst = std::max(worst, rel(apply_multiplier(c, frac_laplacian(sigma)), c.scaled(std::pow(k, sigma))));
      worst = std::max(worst, rel(apply_multiplier(c, bessel(sigma)), c.scaled(std::pow(1 + k * k, sigma / 2))));
    }
    // u = grad_perp (-Delta)^{-1+beta/2} cos(k.x) = |k|^{beta-2} (b, -a) sin(k.x)
    for (double beta : {0.25, 0.5, 0.75}) {
      const VectorField u = biot_savart_velocity(c, beta);
      const double amp = std::pow(k, beta - 2.0);
      const double scale = amp * k;
      worst = std::max(worst, (u[0] - s.scaled(amp * b)).max_abs() / scale);
      worst = std::max(worst, (u[1] - s.scaled(-amp * a)).max_abs() / scale);
    }
  }
  Outcome o;
  o.require(worst <= 1e-12, fmt("max relative error %.2e", worst));
  return o;
}

Outcome multiplier_suites() {
  Outcome o;
  double single = 0.0;
  const std::vector<MultiplierBound> variants{MultiplierBound::bernstein, MultiplierBound::lemma_3_1,
                                              MultiplierBound::lemma_A_2};
  for (auto v : variants)
    for (double p : {2.0, inf})
      for (double beta : {0.25, 0.5, 0.75})
        for (std::size_t n : {128u, 256u}) {
          CheckParams params = default_params(check_id(v));
          params.p = p;
          params.beta = beta;
          for (double r : single_mode_ratios(v, params, n)) single = std::max(single, std::abs(r - 1.0));
        }
  o.require(single <= 1e-10, fmt("single modes |R-1| <= %.1e", single));
  double spread = 0.0, drift = 0.0;
  for (auto v : variants)
    for (double p : {2.0, inf})
      for (double beta : {0.25, 0.5, 0.75}) {
        // beta only enters the Biot-Savart variant
        if (v != MultiplierBound::lemma_A_2 && beta != 0.5) continue;
        CheckParams params = default_params(check_id(v));
        params.p = p;
        params.beta = beta;
        const auto r = check_multiplier_bounds(v, params, default_ensemble(check_id(v)));
        spread = std::max(spread, r.spread());
        drift = std::max(drift, r.stability);
        if (!r.passed()) o.require(false, summary_line(r));
      }
  o.require(spread <= 4.0, fmt("worst spread %.3f <= 4", spread));
  o.require(drift <= 0.5, fmt("worst drift %.3f <= 0.5", drift));
  return o;
}

Outcome fundamental_solution() {
  Outcome o;
  const Grid2D g(512, 16 * pi);
  for (double beta : {0.25, 0.5, 0.75}) {
    const auto r = verify_fundamental_solution(beta, g);
    std::string seq;
    for (const auto& t : r.measured) seq += (seq.empty() ? "" : ">") + fmt("%.1e", t.ratio);
    o.require(r.passed(), fmt("beta=%.2f", beta) + " " + seq);
  }
  return o;
}

Outcome serfati_identity() {
  Outcome o;
  const Grid2D g(512, 32.0);
  const ScalarField th = random_compact_bump(g, 7);
  std::vector<double> err;
  for (double dt : {0.05, 0.025}) {
    SolverConfig c;
    c.beta = 0.5;
    c.n_side = g.n_side();
    c.L = g.box_length();
    c.dt = dt;
    c.t_end = 0.5;
    c.stop_at_existence_time = false;
    c.accumulate_far = true;
    Simulation sim(c, th, biot_savart_velocity(th, 0.5));
    for (long i = 0; i < std::lround(0.5 / dt); ++i) sim.step(dt);
    const VectorField ub = biot_savart_velocity(sim.state().theta, 0.5);
    err.push_back((sim.serfati_velocity() - ub).max_abs() / ub.max_abs());
  }
  o.require(err[1] <= 1e-3, fmt("error %.2e at dt=0.025", err[1]));
  o.require(err[1] <= err[0] / 2, fmt("halving ratio %.2f", err[0] / err[1]));
  return o;
}

Outcome radial_steady() {
  Outcome o;
  const Grid2D g(256, 2 * pi);
  for (double beta : {0.25, 0.5, 0.75}) {
    const ScalarField th = dealias(radial_gaussian(g, 0.1));
    SolverConfig c;
    c.beta = beta;
    c.n_side = 256;
    c.L = g.box_length();
    c.dt = 1e-3;
    c.stop_at_existence_time = false;
    Simulation sim(c, th, biot_savart_velocity(th, beta));
    double drift = 0.0;
    for (int i = 0; i < 1000; ++i) {
      sim.step(1e-3);
      drift = std::max(drift, rel(sim.state().theta, sim.theta0()));
    }
    o.require(drift <= 1e-6, fmt("beta=%.2f drift %.1e", beta, drift));
  }
  return o;
}

Outcome picard_contraction() {
  Outcome o;
  std::vector<double> rho;
  for (std::size_t n : {128u, 256u}) {
    const Grid2D g(n, 16.0);
    const ScalarField th = random_compact_bump(g, 7);
    const VectorField u0 = biot_savart_velocity(th, 0.5);
    SolverConfig c;
    c.beta = 0.5;
    c.n_side = n;
    c.L = 16.0;
    c.dt = 0.01;
    c.t_end = 1e9;
    c.stop_at_existence_time = true;
    const double T = picard_iterate(c, th, u0, 2).time_bound;
    c.t_end = T / 2;
    c.stop_at_existence_time = false;
    const auto tr = picard_iterate(c, th, u0, 14);
    rho.push_back(tr.contraction_ratio());
    double tail = 0.0;
    const auto sup = tr.sup_decrements();
    for (std::size_t i = 11; i < sup.size(); ++i) tail += sup[i];
    o.require(rho.back() < 1.0, "n=" + std::to_string(n) + fmt(" rho %.3f", rho.back()));
    o.require(tail <= 1e-6, fmt("tail from n=12 %.1e", tail));
    o.require(tr.warnings.empty(), "no stagnation");
  }
  const double var = std::abs(rho[0] - rho[1]) / std::max(rho[0], rho[1]);
  o.require(var <= 0.5, fmt("rho drift %.3f", var));
  return o;
}

Outcome run_checks(const std::vector<std::string>& ids) {
  Outcome o;
  for (const auto& id : ids) {
    const auto r = run_check(id, default_params(id), default_ensemble(id));
    o.require(r.passed(), summary_line(r));
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "partition_of_unity", partition_of_unity},
      {2, "plane_wave_multipliers", plane_wave_multipliers},
      {3, "multiplier_suites", multiplier_suites},
      {4, "fundamental_solution", fundamental_solution},
      {5, "serfati_identity", serfati_identity},
      {6, "radial_steady_state", radial_steady},
      {7, "picard_contraction", picard_contraction},
      {8, "apriori_bounds", [] { return run_checks({"hsul_theorem_3_4", "holder_bound"}); }},
      {9, "norm_equivalence", [] {
         return run_checks({"hs_block_equivalence", "hsul_slobodeckij", "window_scale", "embedding"});
       }},
      {10, "twin_run_uniqueness", [] { return run_checks({"twin_run"}); }},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s %2d %-24s %6.1fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, sec, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
