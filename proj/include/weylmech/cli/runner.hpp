#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylmech/cli/config.hpp"

namespace weylmech::cli {

/// One emitted file: name relative to the output directory and its bytes.
using OutputFile = std::pair<std::string, std::string>;

/// Computes a scenario's outputs in memory without touching the filesystem.
/// `summary` receives a one-line human-readable result. Module errors propagate.
std::vector<OutputFile> scenario_outputs(const ScenarioConfig& cfg, std::string& summary);

struct RunResult {
  ExitCode code = kOk;
  std::string message;              // summary on success, diagnostic otherwise
  std::vector<std::string> files;  // emitted files, manifest last
};

/// Runs the scenario and writes its outputs and manifest.json into cfg.output_dir.
/// Files named by a manifest already in the directory are removed first, so the
/// directory holds exactly one manifest. Nothing is written when the scenario fails,
/// and files written before an I/O failure are removed again.
RunResult run_scenario(const ScenarioConfig& cfg);

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace weylmech::cli
