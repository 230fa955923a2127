#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsqg/dyadic.hpp"
#include "gsqg/ensemble.hpp"
#include "gsqg/report.hpp"
#include "gsqg/solver.hpp"

namespace gsqg {

/// Measured-constant checks. Every check loops over params.grids and an
/// ensemble, records one ratio per (grid, trial) with the grid as the trial
/// group, and applies a verdict from report.hpp. Deterministic given
/// (seed, parameters).

enum class MultiplierBound { bernstein, lemma_3_1, lemma_A_2 };
enum class CommutatorBound { kato_ponce, holder_commutator };
enum class VelocityRegularity { lemma_A_3, lemma_3_2, lemma_3_3, embedding };
enum class AprioriBound { hsul_theorem_3_4, holder_bound, velocity_hsul };
enum class NormEquivalence { hs_blocks, hsul_slobodeckij, window_scale };

struct CheckParams {
  double beta = 0.5;
  /// Sobolev / multiplier order.
  double s = 0.7;
  /// Holder-Zygmund order (embedding: the integer or fractional C~ order).
  double r = 1.5;
  /// Lebesgue exponent; +inf for sup norms.
  double p = 2.0;
  std::vector<std::size_t> grids{128, 256};
  double L = 6.283185307179586;
  double window_scale = 1.0;
  double max_variation = 0.5;
  /// Replaces the declared ceiling (or spread limit) of the check.
  std::optional<double> ceiling;
  /// Apriori and twin-run experiments: time step and the fraction of the existence time simulated.
  double dt = 2e-3;
  double horizon_fraction = 0.5;
};

/// Identifier used in reports and on the command line.
std::string check_id(MultiplierBound v);
std::string check_id(CommutatorBound v);
std::string check_id(VelocityRegularity v);
std::string check_id(AprioriBound v);
std::string check_id(NormEquivalence v);

/// The grids, box and orders each check is specified at, and its ensemble.
CheckParams default_params(const std::string& check_id);
EnsembleSpec default_ensemble(const std::string& check_id);
/// Every check id run_check accepts.
std::vector<std::string> known_checks();

/// ||f||_{L^p} on the torus (h^2 weights); p = +inf gives the sup norm.
double lp_norm(const ScalarField& f, double p);
/// Pointwise Euclidean norm of the vector, then L^p.
double lp_norm(const VectorField& v, double p);
/// Zygmund norm of a vector field: max over the components.
double zygmund_norm(const VectorField& v, double r, const DyadicFamily& family);
/// sup_x of the Frobenius norm of grad v.
double gradient_sup(const VectorField& v);

/// u . grad(Delta_j theta) - Delta_j(u . grad theta), dealiased products.
ScalarField block_commutator(const VectorField& u, const ScalarField& theta, const DyadicFamily& family, int j);

/// Ratios of the variant for f = cos(2^j x1) on the 2 pi box at every realizable j.
/// Each is exactly 1 in exact arithmetic.
std::vector<double> single_mode_ratios(MultiplierBound variant, const CheckParams& params, std::size_t n_side);

/// Block ratios R_j = ||N_j||_p / (2^{j a} ||dot Delta_j f||_p) for every realizable
/// homogeneous block: N = grad (a = 1), (-Delta)^{s/2} (a = s) or the Biot-Savart
/// symbol (a = beta - 1). Spread verdict: max/min <= 4 (declared) within each grid
/// pair, stable across grids. Blocks with ||dot Delta_j f|| < 1e-14 are skipped.
VerificationReport check_multiplier_bounds(MultiplierBound variant, const CheckParams& params, EnsembleSpec ensemble);

/// kato_ponce: ||J^s(fg) - f J^s g||_p / (||grad f||_inf ||J^{s-1} g||_p + ||J^s f||_p ||g||_inf).
/// holder_commutator: sup_j ||[u.grad, Delta_j] theta||_{C^r} over the two right
/// sides (series "cr": ||grad theta|| ||u||_{C^r} + ||grad u|| ||theta||_{C^r};
/// "cr1": ||theta|| ||u||_{C^{r+1}} + ||grad u|| ||theta||_{C^r}), u the Biot-Savart
/// velocity of a second member. Members are band-limited to n/6 so every product
/// is resolved. Right sides below 1e-14 are skipped.
VerificationReport check_commutators(CommutatorBound variant, const CheckParams& params, EnsembleSpec ensemble);

/// lemma_A_3: ||f||_{C^{r+1-beta}} / (||f||_inf + ||g||_{C^r}), f = biot_savart_velocity(g).
/// lemma_3_2: ||near g||_{dot H^s_ul} / (||g||_{dot H^{s-1+beta}_ul} + ||g||_{L^2_ul}).
/// lemma_3_3: ||near g||_{H^s_ul} / ||g||_{H^{s-1+beta}_ul}.
/// embedding: ||g||_{C~^r} / ||g||_{H^{r+s}_ul}.
/// One-sided: max ratio <= declared ceiling and stable across grids.
VerificationReport check_velocity_regularity(VelocityRegularity variant, const CheckParams& params,
                                             EnsembleSpec ensemble);

/// Equivalence ratios with a two-sided verdict.
/// hs_blocks: LP-block H^s / multiplier H^s, bracket = extremes of the symbol ratio.
/// hsul_slobodeckij: W^{s,2}_ul / H^s_ul, bracket from slobodeckij_sobolev_bracket.
/// window_scale: H^s_ul at window scale 2 lambda / at lambda, spread <= 4 (declared).
VerificationReport check_norm_equivalence(NormEquivalence variant, const CheckParams& params, EnsembleSpec ensemble);

/// Extremes of sqrt(sum_j 2^{2js} psi_j(r)^2 / (1 + r^2)^s) over 0 <= r <= r_max.
std::pair<double, double> hs_block_bracket(const DyadicFamily& family, double s, double r_max);

/// Norm labels a trajectory must carry for the variant.
std::vector<NormDescriptor> required_norms(AprioriBound variant, const CheckParams& params);

/// Bound constants fitted on each labelled trajectory (label = trial group).
/// hsul_theorem_3_4: minimal K with ||theta(t)||_{H^s_ul} <= ||theta0|| exp(K int (||u||_{C~1} + ||theta||_{W^{1,inf}})).
/// holder_bound: fitted C of the rational bound on ||u||_inf + ||theta||_{C^r};
///   warning verdict when 1 - C t psi0 <= 0 inside a run.
/// velocity_hsul: ||u||_{H^s_ul} / (||theta||_{H^{s-1+beta}_ul} + ||u||_{C~1}) at every sample.
/// The bound curves built from the fitted constants are checked to dominate the
/// measured norms at every sample. Runs whose initial norm vanishes are skipped
/// (zero data pass vacuously). Throws ConfigError when a norm series is missing.
VerificationReport check_apriori_bounds(const std::vector<std::pair<std::string, Trajectory>>& runs,
                                        AprioriBound variant, const CheckParams& params);

/// The solver config the apriori and twin-run experiments use on one grid.
SolverConfig experiment_config(const CheckParams& params, std::size_t n_side);

/// Simulates ensemble member 0 on every grid of params (horizon: fraction of the
/// existence time) and runs check_apriori_bounds on the trajectories.
VerificationReport run_apriori_experiment(AprioriBound variant, const CheckParams& params,
                                          const EnsembleSpec& ensemble);

/// Twin runs from theta0 and theta0 + delta p for every delta; fits
/// e(t) = ||theta - theta'||_inf + ||u - u'||_inf <= K delta exp(Lambda t)
/// (Lambda by least squares on log(e / delta), K the smallest dominating
/// prefactor). Series "K" and "Lambda", one group per delta; passes iff both
/// vary <= max_variation across delta. Lambda may be <= 0 inside short windows.
VerificationReport check_twin_run(const SolverConfig& config, const ScalarField& theta0, const ScalarField& perturbation,
                                  const std::vector<double>& deltas, double max_variation = 0.5);

/// Twin-run experiment on ensemble member 0 with a band-limited perturbation, deltas 1e-3, 1e-4, 1e-5.
VerificationReport run_twin_experiment(const CheckParams& params, const EnsembleSpec& ensemble);

/// Dispatch by identifier (any of known_checks()).
VerificationReport run_check(const std::string& check_id, const CheckParams& params, const EnsembleSpec& ensemble);

}  // namespace gsqg
