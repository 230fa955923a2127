#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "gsqg/ensemble.hpp"
#include "gsqg/error.hpp"
#include "gsqg/solver.hpp"
#include "gsqg/verify.hpp"

namespace gsqg::cli {

/// Initial data for simulate / iterate / norms.
struct InitialData {
  /// radial | compact_bump | band_limited | constant_plus_bump | single_mode | file
  std::string kind = "radial";
  double sigma = 1.0;
  double amplitude = 1.0;
  /// Background constant of constant_plus_bump.
  double background = 1.0;
  /// Integer wavenumber along x1 for single_mode.
  long mode = 1;
  double spectral_slope = 2.5;
  long max_mode = 0;
  /// .fld container (first component is theta).
  std::string path;
};

struct CheckSpec {
  std::string id;
  CheckParams params;
  EnsembleSpec ensemble;
};

struct ExperimentConfig {
  std::string command;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir;
  SolverConfig solver;
  InitialData initial;
  std::vector<CheckSpec> checks;
  /// norms command; defaults to a standard set when empty.
  std::vector<NormDescriptor> norms;
  /// iterate: number of Picard iterates.
  std::size_t n_max = 12;
  /// kernels: sampled or spectral realization.
  KernelRealization realization = KernelRealization::spectral;
  /// simulate: write theta and u at every sample as .fld.
  bool checkpoints = false;
};

/// Thrown for invalid documents; the message names the failing key.
class UsageError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

const std::vector<std::string>& commands();

/// Strict parse: unknown keys and ill-typed values raise UsageError. A manifest
/// written by run() is accepted too (its "config" member is used).
ExperimentConfig parse_config(const nlohmann::json& doc);
/// The fully resolved config, readable by parse_config.
nlohmann::json to_json(const ExperimentConfig& config);

/// Check descriptor with the defaults of its id filled in.
CheckSpec default_check(const std::string& id, std::uint64_t seed);

ScalarField make_initial(const ExperimentConfig& config);

struct RunResult {
  int exit_code = 0;
  nlohmann::json manifest;
};

/// Dispatches the command, writes artifacts and manifest.json into output_dir.
/// exit_code: 0 success, 1 a check failed.
RunResult run(const ExperimentConfig& config);

}  // namespace gsqg::cli
