// gsqg: batch front end. Every run writes manifest.json into the output directory.
//
//   gsqg verify --check bernstein --beta 0.5 --n 256
//   gsqg simulate --ic radial --t-end 1 --out runs/radial
//   gsqg iterate --config picard.json
//
// Exit status: 0 success, 1 a check failed, 2 bad config or usage, 3 runtime failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "experiment.hpp"

using namespace gsqg;
using namespace gsqg::cli;

namespace {

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::vector<std::string> checks;
  std::optional<double> beta, s, r, p, L, dt, t_end, sigma, sample_interval;
  std::optional<std::size_t> n, n_max, count;
  std::vector<std::size_t> grids;
  std::string ic, constitutive, realization;
  std::vector<std::string> norms;
  bool no_cap = false, checkpoints = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON experiment document (or a manifest.json)");
  cmd->add_option("--seed", f.seed, "Seed for random initial data and ensembles");
  cmd->add_option("--out", f.out, "Output directory (default: $OUTPUT_DIR, then gsqg-output)");
  cmd->add_option("--beta", f.beta, "gSQG order in (0, 1)");
  cmd->add_option("--n", f.n, "Grid side (verify: finest grid, checks run on n/2 and n)");
  cmd->add_option("--L", f.L, "Box length");
}

void add_solver(CLI::App* cmd, Flags& f) {
  cmd->add_option("--dt", f.dt, "Time step");
  cmd->add_option("--t-end", f.t_end, "Final time");
  cmd->add_option("--r", f.r, "Zygmund order of the existence-time estimate");
  cmd->add_option("--ic", f.ic, "radial | compact_bump | band_limited | constant_plus_bump | single_mode");
  cmd->add_option("--sigma", f.sigma, "Width of the radial initial Gaussian");
  cmd->add_flag("--no-cap", f.no_cap, "Run to t_end past the existence-time estimate");
}

// Flags override the document.
void apply(const Flags& f, ExperimentConfig& c) {
  if (f.seed) c.seed = *f.seed;
  if (!f.out.empty()) c.output_dir = f.out;
  SolverConfig& s = c.solver;
  if (f.beta) s.beta = *f.beta;
  if (f.n) s.n_side = *f.n;
  if (f.L) s.L = *f.L;
  if (f.dt) s.dt = *f.dt;
  if (f.t_end) s.t_end = *f.t_end;
  if (f.r) s.r = *f.r;
  if (f.sample_interval) s.sample_interval = *f.sample_interval;
  if (f.no_cap) s.stop_at_existence_time = false;
  if (!f.constitutive.empty()) {
    nlohmann::json j = {{"solver", {{"constitutive", f.constitutive}}}};
    s.constitutive = parse_config(j).solver.constitutive;
  }
  if (!f.ic.empty()) {
    nlohmann::json j = {{"initial", {{"kind", f.ic}}}};
    c.initial.kind = parse_config(j).initial.kind;
  }
  if (f.sigma) c.initial.sigma = *f.sigma;
  if (f.n_max) c.n_max = *f.n_max;
  if (f.checkpoints) c.checkpoints = true;
  if (!f.realization.empty()) {
    nlohmann::json j = {{"realization", f.realization}};
    c.realization = parse_config(j).realization;
  }
  for (const auto& n : f.norms) c.norms.push_back(NormDescriptor::parse(n));
  if (c.command == "verify" && f.seed)
    for (auto& k : c.checks) k.ensemble.seed = *f.seed;
  for (const auto& id : f.checks) c.checks.push_back(default_check(id, c.seed));
  if (c.command == "verify") {
    for (auto& k : c.checks) {
      CheckParams& p = k.params;
      if (f.beta) p.beta = *f.beta;
      if (f.s) p.s = *f.s;
      if (f.r) p.r = *f.r;
      if (f.p) p.p = *f.p;
      if (f.L) p.L = *f.L;
      if (f.dt) p.dt = *f.dt;
      if (f.count) k.ensemble.count = *f.count;
      if (!f.grids.empty()) {
        p.grids = f.grids;
      } else if (f.n) {
        p.grids = p.grids.size() == 1 ? std::vector<std::size_t>{*f.n} : std::vector<std::size_t>{*f.n / 2, *f.n};
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gSQG pseudo-spectral laboratory"};
  app.require_subcommand(1);
  Flags f;

  auto* verify = app.add_subcommand("verify", "Run inequality checks and write report.csv");
  add_common(verify, f);
  verify->add_option("--check", f.checks, "Check id (repeatable); see --list");
  verify->add_option("--s", f.s, "Sobolev / multiplier order");
  verify->add_option("--r", f.r, "Holder-Zygmund order");
  verify->add_option("--p", f.p, "Lebesgue exponent (inf for sup norms)");
  verify->add_option("--grids", f.grids, "Grid sides, overriding --n");
  verify->add_option("--count", f.count, "Ensemble size");
  verify->add_option("--dt", f.dt, "Time step of the a priori and twin-run experiments");
  bool list = false;
  verify->add_flag("--list", list, "Print the known check ids and exit");

  auto* sim = app.add_subcommand("simulate", "Time-step theta and record norm time series");
  add_common(sim, f);
  add_solver(sim, f);
  sim->add_option("--constitutive", f.constitutive, "direct | serfati");
  sim->add_option("--norm", f.norms, "Norm to record, e.g. theta_hsul:2.5 (repeatable)");
  sim->add_option("--sample-interval", f.sample_interval, "Norm and checkpoint cadence");
  sim->add_flag("--checkpoints", f.checkpoints, "Write theta and u at every sample as .fld");

  auto* iter = app.add_subcommand("iterate", "Picard approximating sequence and its decrements");
  add_common(iter, f);
  add_solver(iter, f);
  iter->add_option("--n-max", f.n_max, "Number of iterates");

  auto* norms = app.add_subcommand("norms", "Norms of the initial field");
  add_common(norms, f);
  norms->add_option("--ic", f.ic, "Initial data kind");
  norms->add_option("--sigma", f.sigma, "Width of the radial initial Gaussian");
  norms->add_option("--norm", f.norms, "Norm descriptor (repeatable)");

  auto* kern = app.add_subcommand("kernels", "Near/far kernel samples and profiles");
  add_common(kern, f);
  kern->add_option("--realization", f.realization, "spectral | sampled");

  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& id : known_checks()) std::cout << id << '\n';
    return 0;
  }

  try {
    ExperimentConfig c;
    if (!f.config.empty()) {
      std::ifstream in(f.config);
      if (!in) throw UsageError("cannot read config '" + f.config + "'");
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("config is not valid JSON: ") + e.what());
      }
      c = parse_config(doc);
    }
    const std::string command = app.get_subcommands().front()->get_name();
    if (!c.command.empty() && c.command != command)
      throw UsageError("config command '" + c.command + "' does not match '" + command + "'");
    c.command = command;
    apply(f, c);
    if (c.output_dir.empty()) {
      const char* env = std::getenv("OUTPUT_DIR");
      c.output_dir = env && *env ? env : "gsqg-output";
    }
    const RunResult res = run(c);
    if (res.manifest.contains("results") && res.manifest["results"].is_array())
      for (const auto& r : res.manifest["results"]) std::cout << r["summary"].get<std::string>() << '\n';
    std::cout << "manifest: " << (c.output_dir / "manifest.json").string() << '\n';
    return res.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "gsqg: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "gsqg: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gsqg: " << e.what() << '\n';
    return 3;
  }
}
