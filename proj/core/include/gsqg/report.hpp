#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace gsqg {

enum class Verdict { pass, fail, warning };

std::string to_string(Verdict v);

/// One measured ratio. group names the grid / refinement level (or parameter
/// set) the trial belongs to; stability compares groups within a series.
/// series separates quantities that are not comparable with each other
/// (two forms of one inequality, p = 2 vs p = inf).
struct Trial {
  std::string group;
  std::size_t index = 0;
  double ratio = 0.0;
  std::string series{};
};

struct VerificationReport {
  std::string check_id;
  std::map<std::string, double> parameters;
  std::vector<Trial> measured;
  Verdict verdict = Verdict::fail;
  /// Largest (max - min) / max over the per-group maxima (and minima for
  /// two-sided verdicts) within one series.
  double stability = 0.0;
  double ceiling = 0.0;
  /// Lower end of a bracket verdict; 0 for one-sided checks.
  double lower = 0.0;
  /// Allowed max / min for a spread verdict; 0 when unused.
  double spread_limit = 0.0;
  std::size_t skipped = 0;
  std::vector<std::string> notes;

  double max_ratio() const;
  double min_ratio() const;
  double median_ratio() const;
  /// Max ratio inside one group.
  double group_max(const std::string& group) const;
  double group_min(const std::string& group) const;
  std::vector<std::string> groups() const;
  std::vector<std::string> series() const;
  /// max / min over the positive ratios of a series ("" for all).
  double spread(const std::string& series = "") const;
  bool passed() const { return verdict == Verdict::pass; }
};

/// (max - min) / max |c| of a set of constants; 0 for fewer than two or all zero.
double relative_variation(const std::vector<double>& constants);

/// Fills stability and verdict: pass iff max ratio <= ceiling, stability <=
/// max_variation, and no trial exceeds 10x the median (when the median is
/// positive). An empty report passes vacuously.
void finalize(VerificationReport& report, double ceiling, double max_variation = 0.5);

/// Two-sided form: pass iff every ratio lies in [lower, ceiling], with the same
/// stability (maxima and minima) and outlier rules.
void finalize_bracket(VerificationReport& report, double lower, double ceiling, double max_variation = 0.5);

/// pass iff max / min <= max_spread within every series, with the same stability
/// (maxima and minima) and outlier rules. Ratios must be positive.
void finalize_spread(VerificationReport& report, double max_spread, double max_variation = 0.5);

/// Stable short hash of the parameter map.
std::string parameter_hash(const std::map<std::string, double>& parameters);

/// Rows: check_id, param_hash, group, trial, ratio (series appended to group as "group/series").
void write_report_csv(const std::filesystem::path& path, const std::vector<VerificationReport>& reports);
/// "check_id verdict max=... stability=..." on one line.
std::string summary_line(const VerificationReport& report);

}  // namespace gsqg
