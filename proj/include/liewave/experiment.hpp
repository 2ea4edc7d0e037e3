#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "liewave/cauchy.hpp"
#include "liewave/io.hpp"

namespace liewave {

inline constexpr const char* kVersion = "0.1.0";

/// A validated run description. `normalized` is the config with every default
/// filled in; its SHA-256 is the config hash.
struct ExperimentConfig {
  CauchyProblem problem;
  ProfileParams profile_params;
  double s = 0.0;
  double dt = 1e-3;
  int snapshots = 16;
  std::uint64_t seed = 0;
  Json normalized;
};

/// Validates and builds a config. Errors are ErrorCode::config with a JSON
/// pointer to the offending field. `seed_override` replaces the file's seed.
ExperimentConfig parse_config(const Json& j, std::optional<std::uint64_t> seed_override = {});

/// File name -> content, ready to be written.
struct ExperimentOutputs {
  std::map<std::string, std::string> files;
  Json report;
};

ExperimentOutputs run_experiment(const ExperimentConfig& cfg, int workers = 1);

/// Creates `dir` if needed and writes every file.
void write_outputs(const ExperimentOutputs& out, const std::string& dir);

}  // namespace liewave
