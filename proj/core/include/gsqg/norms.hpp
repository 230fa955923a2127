#pragma once

#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "gsqg/dyadic.hpp"
#include "gsqg/field.hpp"

namespace gsqg {

struct NormReport {
  std::string kind;
  double parameter = 0.0;
  double value = 0.0;
  /// Per-block (Zygmund, LP Sobolev) or per-window values.
  std::vector<double> profile;
  /// Block index of profile[0] for block profiles.
  int first_block = 0;
  /// Second estimator where one exists (LP-block variant of the Sobolev norm).
  double alternate = std::numeric_limits<double>::quiet_NaN();
  std::string tested_range;
};

/// sup_j 2^{jr} ||Delta_j f||_inf over j = -1..j_top, or sup_j ||dot Delta_j f||_inf
/// over the resolvable homogeneous blocks.
NormReport zygmund_norm(const ScalarField& f, double r, const DyadicFamily& family, bool homogeneous = false);

/// sum_{|a| <= floor r} ||D^a f||_inf plus, for non-integer r, the exact grid
/// supremum of |D^b f(x) - D^b f(y)| / |x - y|^{r - floor r} over |b| = floor r
/// (minimum-image distances).
NormReport classical_holder_norm(const ScalarField& f, double r);

/// Holder seminorm of a single field over grid pairs.
double holder_seminorm(const ScalarField& f, double sigma);

/// ||J^s f||_{L^2} (or |||xi|^s f||_{L^2}); alternate holds the LP-block variant.
NormReport sobolev_norm(const ScalarField& f, double s, bool homogeneous = false);

/// ||J^s f||_{L^2} (or |||xi|^s f||_{L^2}) alone.
double sobolev_value(const ScalarField& f, double s, bool homogeneous = false);

/// sum of ||D^a f||_inf over |a| <= m.
double sup_derivative_sum(const ScalarField& f, int m);

/// CSV rows (kind, param, value).
void write_norm_reports_csv(const std::filesystem::path& path, const std::vector<NormReport>& reports);

}  // namespace gsqg
