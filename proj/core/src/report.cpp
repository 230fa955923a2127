#include "gsqg/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>

#include "gsqg/error.hpp"

namespace gsqg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::warning: return "warning";
  }
  return "fail";
}

double VerificationReport::max_ratio() const {
  double m = 0.0;
  for (const auto& t : measured) m = std::max(m, t.ratio);
  return m;
}

double VerificationReport::min_ratio() const {
  if (measured.empty()) return 0.0;
  double m = std::numeric_limits<double>::infinity();
  for (const auto& t : measured) m = std::min(m, t.ratio);
  return m;
}

double VerificationReport::median_ratio() const {
  if (measured.empty()) return 0.0;
  std::vector<double> r;
  for (const auto& t : measured) r.push_back(t.ratio);
  std::nth_element(r.begin(), r.begin() + r.size() / 2, r.end());
  return r[r.size() / 2];
}

double VerificationReport::group_max(const std::string& group) const {
  double m = 0.0;
  for (const auto& t : measured)
    if (t.group == group) m = std::max(m, t.ratio);
  return m;
}

double VerificationReport::group_min(const std::string& group) const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& t : measured)
    if (t.group == group) m = std::min(m, t.ratio);
  return m;
}

std::vector<std::string> VerificationReport::groups() const {
  std::vector<std::string> g;
  for (const auto& t : measured)
    if (std::find(g.begin(), g.end(), t.group) == g.end()) g.push_back(t.group);
  return g;
}

std::vector<std::string> VerificationReport::series() const {
  std::vector<std::string> s;
  for (const auto& t : measured)
    if (std::find(s.begin(), s.end(), t.series) == s.end()) s.push_back(t.series);
  return s;
}

double VerificationReport::spread(const std::string& which) const {
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& t : measured) {
    if (!which.empty() && t.series != which) continue;
    if (!(t.ratio > 0.0)) continue;
    lo = std::min(lo, t.ratio);
    hi = std::max(hi, t.ratio);
  }
  return hi > 0.0 ? hi / lo : 0.0;
}

double relative_variation(const std::vector<double>& constants) {
  if (constants.size() < 2) return 0.0;
  const auto [lo, hi] = std::minmax_element(constants.begin(), constants.end());
  const double scale = std::max(std::abs(*hi), std::abs(*lo));
  if (scale == 0.0) return 0.0;
  return (*hi - *lo) / scale;
}

namespace {

double series_stability(const VerificationReport& report, bool two_sided) {
  double worst = 0.0;
  for (const auto& s : report.series()) {
    std::vector<double> maxima, minima;
    for (const auto& g : report.groups()) {
      double hi = -std::numeric_limits<double>::infinity(), lo = std::numeric_limits<double>::infinity();
      bool any = false;
      for (const auto& t : report.measured) {
        if (t.group != g || t.series != s) continue;
        any = true;
        hi = std::max(hi, t.ratio);
        lo = std::min(lo, t.ratio);
      }
      if (!any) continue;
      maxima.push_back(hi);
      minima.push_back(lo);
    }
    worst = std::max(worst, relative_variation(maxima));
    if (two_sided) worst = std::max(worst, relative_variation(minima));
  }
  return worst;
}

// Outlier guard and finiteness, shared by every verdict form.
bool sane(VerificationReport& report) {
  bool ok = true;
  for (const auto& s : report.series()) {
    std::vector<double> r;
    for (const auto& t : report.measured)
      if (t.series == s) r.push_back(t.ratio);
    std::nth_element(r.begin(), r.begin() + r.size() / 2, r.end());
    const double median = r[r.size() / 2];
    const double top = *std::max_element(r.begin(), r.end());
    if (median > 0.0 && top > 10.0 * median) {
      ok = false;
      report.notes.push_back("outlier: a trial exceeds 10x the ensemble median" + (s.empty() ? "" : " (" + s + ")"));
    }
  }
  for (const auto& t : report.measured)
    if (!std::isfinite(t.ratio)) ok = false;
  return ok;
}

}  // namespace

void finalize(VerificationReport& report, double ceiling, double max_variation) {
  report.ceiling = ceiling;
  report.stability = series_stability(report, false);
  bool ok = report.max_ratio() <= ceiling && report.stability <= max_variation;
  ok = sane(report) && ok;
  report.verdict = ok ? Verdict::pass : Verdict::fail;
}

void finalize_bracket(VerificationReport& report, double lower, double ceiling, double max_variation) {
  report.ceiling = ceiling;
  report.lower = lower;
  report.stability = series_stability(report, true);
  bool ok = report.stability <= max_variation;
  if (!report.measured.empty()) ok = ok && report.min_ratio() >= lower && report.max_ratio() <= ceiling;
  ok = sane(report) && ok;
  report.verdict = ok ? Verdict::pass : Verdict::fail;
}

void finalize_spread(VerificationReport& report, double max_spread, double max_variation) {
  report.spread_limit = max_spread;
  report.stability = series_stability(report, true);
  bool ok = report.stability <= max_variation;
  for (const auto& s : report.series()) {
    for (const auto& t : report.measured)
      if (t.series == s && !(t.ratio > 0.0)) ok = false;
    if (report.spread(s) > max_spread) ok = false;
  }
  ok = sane(report) && ok;
  report.verdict = ok ? Verdict::pass : Verdict::fail;
}

std::string parameter_hash(const std::map<std::string, double>& parameters) {
  // FNV-1a over "key=value;" with values printed to full precision.
  std::uint64_t h = 1469598103934665603ull;
  char buf[64];
  for (const auto& [k, v] : parameters) {
    std::string item = k + "=";
    std::snprintf(buf, sizeof buf, "%.17g;", v);
    item += buf;
    for (unsigned char c : item) {
      h ^= c;
      h *= 1099511628211ull;
    }
  }
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_report_csv(const std::filesystem::path& path, const std::vector<VerificationReport>& reports) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << "check_id,param_hash,group,trial,ratio\n";
  out.precision(17);
  for (const auto& r : reports) {
    const std::string hash = parameter_hash(r.parameters);
    for (const auto& t : r.measured)
      out << r.check_id << ',' << hash << ',' << t.group << (t.series.empty() ? "" : "/" + t.series) << ','
          << t.index << ',' << t.ratio << '\n';
  }
}

std::string summary_line(const VerificationReport& report) {
  char buf[320];
  if (report.spread_limit > 0.0) {
    double spread = 0.0;
    for (const auto& s : report.series()) spread = std::max(spread, report.spread(s));
    std::snprintf(buf, sizeof buf, "%s %s spread=%.6g limit=%.6g stability=%.3f trials=%zu skipped=%zu",
                  report.check_id.c_str(), to_string(report.verdict).c_str(), spread, report.spread_limit,
                  report.stability, report.measured.size(), report.skipped);
  } else if (report.lower > 0.0) {
    std::snprintf(buf, sizeof buf, "%s %s min=%.6g max=%.6g bracket=[%.6g, %.6g] stability=%.3f trials=%zu skipped=%zu",
                  report.check_id.c_str(), to_string(report.verdict).c_str(), report.min_ratio(), report.max_ratio(),
                  report.lower, report.ceiling, report.stability, report.measured.size(), report.skipped);
  } else {
    std::snprintf(buf, sizeof buf, "%s %s max=%.6g ceiling=%.6g stability=%.3f trials=%zu skipped=%zu",
                  report.check_id.c_str(), to_string(report.verdict).c_str(), report.max_ratio(), report.ceiling,
                  report.stability, report.measured.size(), report.skipped);
  }
  return buf;
}

}  // namespace gsqg
