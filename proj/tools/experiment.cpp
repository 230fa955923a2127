#include "experiment.hpp"

#include <cmath>
#include <fstream>
#include <algorithm>
#include <limits>
#include <numbers>
#include <set>

#include "gsqg/dyadic.hpp"
#include "gsqg/field_io.hpp"
#include "gsqg/kernels.hpp"
#include "gsqg/multipliers.hpp"
#include "gsqg/picard.hpp"
#include "gsqg/report.hpp"

namespace gsqg::cli {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw UsageError(where + ": expected an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw UsageError("unknown key '" + (where.empty() ? key : where + "." + key) + "'");
}

// Typed read with the key path in the error message.
template <class T>
void read(const json& obj, const std::string& key, T& out, const std::string& where) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError("bad value for '" + where + "." + key + "'");
  }
}

// Numbers, or "inf" for the sup exponent.
void read_extended(const json& obj, const std::string& key, double& out, const std::string& where) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  if (v.is_number()) {
    out = v.get<double>();
  } else if (v.is_string() && (v == "inf" || v == "infinity")) {
    out = std::numeric_limits<double>::infinity();
  } else {
    throw UsageError("bad value for '" + where + "." + key + "'");
  }
}

json extended(double x) { return std::isinf(x) ? json("inf") : json(x); }

Constitutive parse_constitutive(const std::string& s) {
  if (s == "direct") return Constitutive::direct;
  if (s == "serfati") return Constitutive::serfati;
  throw UsageError("bad value for 'solver.constitutive': " + s);
}

std::string name(Constitutive c) { return c == Constitutive::direct ? "direct" : "serfati"; }

SolverConfig parse_solver(const json& j) {
  const std::string w = "solver";
  only_keys(j, {"beta", "r", "dt", "t_end", "constitutive", "n_side", "L", "record_norms", "c_existence",
                "stop_at_existence_time", "sample_interval", "accumulate_far"},
            w);
  SolverConfig c;
  read(j, "beta", c.beta, w);
  read(j, "r", c.r, w);
  read(j, "dt", c.dt, w);
  read(j, "t_end", c.t_end, w);
  read(j, "n_side", c.n_side, w);
  read(j, "L", c.L, w);
  read(j, "c_existence", c.c_existence, w);
  read(j, "stop_at_existence_time", c.stop_at_existence_time, w);
  read(j, "sample_interval", c.sample_interval, w);
  read(j, "accumulate_far", c.accumulate_far, w);
  std::string constitutive = "direct";
  read(j, "constitutive", constitutive, w);
  c.constitutive = parse_constitutive(constitutive);
  std::vector<std::string> norms;
  read(j, "record_norms", norms, w);
  for (const auto& n : norms) c.record_norms.push_back(NormDescriptor::parse(n));
  return c;
}

json solver_json(const SolverConfig& c) {
  json norms = json::array();
  for (const auto& d : c.record_norms) norms.push_back(d.label());
  return {{"beta", c.beta},
          {"r", c.r},
          {"dt", c.dt},
          {"t_end", c.t_end},
          {"constitutive", name(c.constitutive)},
          {"n_side", c.n_side},
          {"L", c.L},
          {"record_norms", norms},
          {"c_existence", c.c_existence},
          {"stop_at_existence_time", c.stop_at_existence_time},
          {"sample_interval", c.sample_interval},
          {"accumulate_far", c.accumulate_far}};
}

InitialData parse_initial(const json& j) {
  const std::string w = "initial";
  only_keys(j, {"kind", "sigma", "amplitude", "background", "mode", "spectral_slope", "max_mode", "path"}, w);
  InitialData d;
  read(j, "kind", d.kind, w);
  read(j, "sigma", d.sigma, w);
  read(j, "amplitude", d.amplitude, w);
  read(j, "background", d.background, w);
  read(j, "mode", d.mode, w);
  read(j, "spectral_slope", d.spectral_slope, w);
  read(j, "max_mode", d.max_mode, w);
  read(j, "path", d.path, w);
  static const std::set<std::string> kinds{"radial",          "compact_bump", "band_limited",
                                           "constant_plus_bump", "single_mode", "file"};
  if (!kinds.count(d.kind)) throw UsageError("bad value for 'initial.kind': " + d.kind);
  if (d.kind == "file" && d.path.empty()) throw UsageError("'initial.path' is required for kind file");
  return d;
}

json initial_json(const InitialData& d) {
  return {{"kind", d.kind},           {"sigma", d.sigma},         {"amplitude", d.amplitude},
          {"background", d.background}, {"mode", d.mode},         {"spectral_slope", d.spectral_slope},
          {"max_mode", d.max_mode},   {"path", d.path}};
}

CheckSpec parse_check(const json& j, std::uint64_t seed, std::size_t i) {
  const std::string w = "checks[" + std::to_string(i) + "]";
  if (j.is_string()) return default_check(j.get<std::string>(), seed);
  only_keys(j, {"id", "beta", "s", "r", "p", "grids", "L", "window_scale", "max_variation", "ceiling", "dt",
                "horizon_fraction", "count", "seed", "field_class", "spectral_slope", "max_mode"},
            w);
  if (!j.contains("id")) throw UsageError("'" + w + ".id' is required");
  std::string id;
  read(j, "id", id, w);
  CheckSpec c = default_check(id, seed);
  CheckParams& p = c.params;
  read(j, "beta", p.beta, w);
  read(j, "s", p.s, w);
  read(j, "r", p.r, w);
  read_extended(j, "p", p.p, w);
  read(j, "grids", p.grids, w);
  read(j, "L", p.L, w);
  read(j, "window_scale", p.window_scale, w);
  read(j, "max_variation", p.max_variation, w);
  read(j, "dt", p.dt, w);
  read(j, "horizon_fraction", p.horizon_fraction, w);
  if (j.contains("ceiling") && !j.at("ceiling").is_null()) {
    double ceiling = 0.0;
    read(j, "ceiling", ceiling, w);
    p.ceiling = ceiling;
  }
  read(j, "count", c.ensemble.count, w);
  read(j, "seed", c.ensemble.seed, w);
  read(j, "spectral_slope", c.ensemble.spectral_slope, w);
  read(j, "max_mode", c.ensemble.max_mode, w);
  if (j.contains("field_class")) {
    std::string fc;
    read(j, "field_class", fc, w);
    try {
      c.ensemble.field_class = parse_field_class(fc);
    } catch (const std::exception&) {
      throw UsageError("bad value for '" + w + ".field_class': " + fc);
    }
  }
  return c;
}

json check_json(const CheckSpec& c) {
  const CheckParams& p = c.params;
  return {{"id", c.id},
          {"beta", p.beta},
          {"s", p.s},
          {"r", p.r},
          {"p", extended(p.p)},
          {"grids", p.grids},
          {"L", p.L},
          {"window_scale", p.window_scale},
          {"max_variation", p.max_variation},
          {"ceiling", p.ceiling ? json(*p.ceiling) : json(nullptr)},
          {"dt", p.dt},
          {"horizon_fraction", p.horizon_fraction},
          {"count", c.ensemble.count},
          {"seed", c.ensemble.seed},
          {"field_class", to_string(c.ensemble.field_class)},
          {"spectral_slope", c.ensemble.spectral_slope},
          {"max_mode", c.ensemble.max_mode}};
}

std::vector<NormDescriptor> default_norms(const SolverConfig& s) {
  std::vector<NormDescriptor> d;
  for (const char* t : {"theta_linf", "theta_l2", "u_linf", "theta_w1inf", "u_c1"}) d.push_back(NormDescriptor::parse(t));
  d.push_back({"theta_zygmund", s.r});
  d.push_back({"theta_hs", 1.5});
  return d;
}

struct Artifacts {
  fs::path dir;
  json list = json::array();

  fs::path add(const std::string& file) {
    list.push_back(file);
    return dir / file;
  }
};

void write_norm_series(const fs::path& path, const Trajectory& tr) {
  std::ofstream out(path);
  out.precision(17);
  out << "t,kind,value\n";
  for (const auto& n : tr.norms) out << n.t << ',' << n.label << ',' << n.value << '\n';
}

// --- commands

int cmd_verify(const ExperimentConfig& cfg, Artifacts& art, json& m) {
  std::vector<VerificationReport> reports;
  json summary = json::array();
  bool failed = false;
  for (const auto& c : cfg.checks) {
    reports.push_back(run_check(c.id, c.params, c.ensemble));
    const auto& r = reports.back();
    if (r.verdict == Verdict::fail) failed = true;
    summary.push_back({{"check_id", r.check_id},
                       {"verdict", to_string(r.verdict)},
                       {"max_ratio", r.max_ratio()},
                       {"min_ratio", r.min_ratio()},
                       {"stability", r.stability},
                       {"trials", r.measured.size()},
                       {"skipped", r.skipped},
                       {"notes", r.notes},
                       {"summary", summary_line(r)}});
  }
  if (!reports.empty()) write_report_csv(art.add("report.csv"), reports);
  m["results"] = summary;
  return failed ? 1 : 0;
}

void check_grid(const ExperimentConfig& cfg, const ScalarField& theta0) {
  if (theta0.grid().n_side() != cfg.solver.n_side || std::abs(theta0.grid().box_length() - cfg.solver.L) > 1e-12)
    throw UsageError("initial field grid does not match solver.n_side / solver.L");
}

int cmd_simulate(const ExperimentConfig& cfg, Artifacts& art, json& m) {
  SolverConfig s = cfg.solver;
  if (s.record_norms.empty()) s.record_norms = default_norms(s);
  s.store_fields = cfg.checkpoints;
  const ScalarField theta0 = make_initial(cfg);
  check_grid(cfg, theta0);
  const Trajectory tr = simulate(s, theta0, biot_savart_velocity(theta0, s.beta));
  write_norm_series(art.add("norms.csv"), tr);
  for (std::size_t k = 0; k < tr.theta.size(); ++k) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04zu", k);
    write_field_binary(art.add(std::string("theta_") + buf + ".fld"), tr.theta[k]);
    write_field_binary(art.add(std::string("u_") + buf + ".fld"), tr.u[k]);
  }
  m["results"] = {{"t_reached", tr.t_reached},
                  {"dt_used", tr.dt_used},
                  {"existence_time", tr.existence_time},
                  {"samples", tr.sample_times().size()},
                  {"diagnostics", tr.diagnostics}};
  return 0;
}

int cmd_iterate(const ExperimentConfig& cfg, Artifacts& art, json& m) {
  const ScalarField theta0 = make_initial(cfg);
  check_grid(cfg, theta0);
  const auto tr = picard_iterate(cfg.solver, theta0, biot_savart_velocity(theta0, cfg.solver.beta), cfg.n_max);
  {
    std::ofstream out(art.add("decrements.csv"));
    out.precision(17);
    out << "n,t,D\n";
    for (std::size_t n = 0; n < tr.decrements.size(); ++n)
      for (std::size_t k = 0; k < tr.times.size(); ++k) out << n + 1 << ',' << tr.times[k] << ',' << tr.decrements[n][k] << '\n';
  }
  {
    std::ofstream out(art.add("bound_curve.csv"));
    out.precision(17);
    out << "t,bound\n";
    for (std::size_t k = 0; k < tr.times.size(); ++k) out << tr.times[k] << ',' << tr.norm_bound_curve[k] << '\n';
  }
  write_field_binary(art.add("theta_final.fld"), tr.theta.back());
  write_field_binary(art.add("u_final.fld"), tr.u.back());
  m["results"] = {{"horizon", tr.horizon},
                  {"time_bound", tr.time_bound},
                  {"saturation_index", tr.saturation_index()},
                  {"contraction_ratio", tr.contraction_ratio()},
                  {"final_decrements", tr.final_decrements()},
                  {"warnings", tr.warnings}};
  return 0;
}

int cmd_norms(const ExperimentConfig& cfg, Artifacts& art, json& m) {
  const ScalarField theta0 = dealias(make_initial(cfg));
  const VectorField u0 = biot_savart_velocity(theta0, cfg.solver.beta);
  const auto norms = cfg.norms.empty() ? default_norms(cfg.solver) : cfg.norms;
  json values = json::object();
  std::ofstream out(art.add("norms.csv"));
  out.precision(17);
  out << "kind,value\n";
  for (const auto& d : norms) {
    const double v = measure_norm(d, theta0, u0);
    values[d.label()] = v;
    out << d.label() << ',' << v << '\n';
  }
  write_field_binary(art.add("theta0.fld"), theta0);
  m["results"] = values;
  return 0;
}

int cmd_kernels(const ExperimentConfig& cfg, Artifacts& art, json& m) {
  const Grid2D g(cfg.solver.n_side, cfg.solver.L);
  const KernelSplit split = build_split(g, cfg.solver.beta, cfg.realization);
  write_field_binary(art.add("near_kernel.fld"), split.near_samples());
  const auto far = split.far_samples();
  const std::vector<ScalarField> comps{far[0][0], far[0][1], far[1][0], far[1][1]};
  write_field_binary(art.add("far_kernel.fld"), std::span<const ScalarField>(comps));
  {
    std::ofstream out(art.add("kernel_profile.csv"));
    out.precision(17);
    out << "r,near_d1,far_d1,far_d2\n";
    for (int i = 1; i <= 400; ++i) {
      const double r = 0.01 * i;
      const auto f = split.far_radial(r);
      out << r << ',' << split.near_radial(r) << ',' << f[0] << ',' << f[1] << '\n';
    }
  }
  export_profiles_csv(art.add("dyadic_profiles.csv"));
  m["results"] = {{"c_beta", split.c()}, {"near_l1", split.near_l1()}, {"far_tail_bound", split.far_tail_bound()}};
  return 0;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"verify", "simulate", "iterate", "norms", "kernels"};
  return c;
}

CheckSpec default_check(const std::string& id, std::uint64_t seed) {
  CheckSpec c;
  c.id = id;
  try {
    c.params = default_params(id);
  } catch (const ConfigError&) {
    throw UsageError("unknown check '" + id + "'");
  }
  c.ensemble = default_ensemble(id);
  // a check that fixes its own member keeps it
  if (c.ensemble.seed == EnsembleSpec{}.seed) c.ensemble.seed = seed;
  return c;
}

ExperimentConfig parse_config(const json& doc_in) {
  const json& doc = doc_in.is_object() && doc_in.contains("artifacts") && doc_in.contains("config")
                        ? doc_in.at("config")
                        : doc_in;
  only_keys(doc, {"command", "seed", "output_dir", "solver", "initial", "checks", "norms", "n_max", "realization",
                  "checkpoints"},
            "");
  ExperimentConfig c;
  read(doc, "command", c.command, "");
  if (!c.command.empty() && std::find(commands().begin(), commands().end(), c.command) == commands().end())
    throw UsageError("bad value for 'command': " + c.command);
  read(doc, "seed", c.seed, "");
  std::string out;
  read(doc, "output_dir", out, "");
  c.output_dir = out;
  if (doc.contains("solver")) c.solver = parse_solver(doc.at("solver"));
  if (doc.contains("initial")) c.initial = parse_initial(doc.at("initial"));
  if (doc.contains("checks")) {
    if (!doc.at("checks").is_array()) throw UsageError("'checks' must be an array");
    for (std::size_t i = 0; i < doc.at("checks").size(); ++i) c.checks.push_back(parse_check(doc.at("checks")[i], c.seed, i));
  }
  std::vector<std::string> norms;
  read(doc, "norms", norms, "");
  for (const auto& n : norms) {
    try {
      c.norms.push_back(NormDescriptor::parse(n));
    } catch (const std::exception&) {
      throw UsageError("bad value for 'norms': " + n);
    }
  }
  read(doc, "n_max", c.n_max, "");
  std::string realization = "spectral";
  read(doc, "realization", realization, "");
  if (realization == "spectral") {
    c.realization = KernelRealization::spectral;
  } else if (realization == "sampled") {
    c.realization = KernelRealization::sampled;
  } else {
    throw UsageError("bad value for 'realization': " + realization);
  }
  read(doc, "checkpoints", c.checkpoints, "");
  return c;
}

json to_json(const ExperimentConfig& c) {
  json checks = json::array();
  for (const auto& k : c.checks) checks.push_back(check_json(k));
  json norms = json::array();
  for (const auto& d : c.norms) norms.push_back(d.label());
  return {{"command", c.command},
          {"seed", c.seed},
          {"output_dir", c.output_dir.string()},
          {"solver", solver_json(c.solver)},
          {"initial", initial_json(c.initial)},
          {"checks", checks},
          {"norms", norms},
          {"n_max", c.n_max},
          {"realization", c.realization == KernelRealization::spectral ? "spectral" : "sampled"},
          {"checkpoints", c.checkpoints}};
}

ScalarField make_initial(const ExperimentConfig& cfg) {
  const InitialData& d = cfg.initial;
  if (d.kind == "file") {
    auto comps = read_field_binary(d.path);
    if (comps.empty()) throw UsageError("'initial.path' holds no field");
    return comps.front();
  }
  const Grid2D g(cfg.solver.n_side, cfg.solver.L);
  if (d.kind == "radial") return radial_gaussian(g, d.sigma, d.amplitude);
  if (d.kind == "compact_bump") return random_compact_bump(g, cfg.seed).scaled(d.amplitude);
  if (d.kind == "band_limited") return random_band_limited(g, cfg.seed, d.spectral_slope, d.max_mode).scaled(d.amplitude);
  if (d.kind == "constant_plus_bump")
    return ScalarField::constant(g, d.background) + random_compact_bump(g, cfg.seed).scaled(d.amplitude);
  const double k = 2.0 * std::numbers::pi / cfg.solver.L * double(d.mode);
  return ScalarField::sample(g, [&](double x, double) { return d.amplitude * std::cos(k * x); });
}

RunResult run(const ExperimentConfig& cfg) {
  if (cfg.command.empty()) throw UsageError("'command' is required");
  fs::create_directories(cfg.output_dir);
  Artifacts art{cfg.output_dir};
  json m;
  m["command"] = cfg.command;
  m["config"] = to_json(cfg);
  int code = 0;
  if (cfg.command == "verify") code = cmd_verify(cfg, art, m);
  if (cfg.command == "simulate") code = cmd_simulate(cfg, art, m);
  if (cfg.command == "iterate") code = cmd_iterate(cfg, art, m);
  if (cfg.command == "norms") code = cmd_norms(cfg, art, m);
  if (cfg.command == "kernels") code = cmd_kernels(cfg, art, m);
  m["artifacts"] = art.list;
  m["exit_code"] = code;
  std::ofstream(cfg.output_dir / "manifest.json") << m.dump(2) << '\n';
  return {code, m};
}

}  // namespace gsqg::cli
