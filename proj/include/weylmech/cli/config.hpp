#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weylmech/evolution/evolution.hpp"
#include "weylmech/numeric/grid.hpp"
#include "weylmech/quasidensity/quasidensity.hpp"

namespace weylmech::cli {

inline constexpr std::string_view kVersion = "weylmech 0.1.0 (snapshot format 1)";

enum class Scenario { roundtrip, gaussian_spectrum, symbolic_audit, evolve, compare };

std::string_view scenario_name(Scenario s);

enum ExitCode : int { kOk = 0, kSyntax = 2, kUnknownKey = 3, kConstraint = 4, kRuntime = 5 };

/// Configuration problem carrying its exit code.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

struct ScenarioConfig {
  Scenario scenario = Scenario::roundtrip;
  numeric::GridSpec grid;
  std::vector<quasidensity::GaussianComponent> density{quasidensity::GaussianComponent{}};
  evolution::PotentialSpec potential;
  evolution::EvolutionConfig evolution;
  bool write_snapshots = true;
  int cases = 8;  // random fields in roundtrip, instances per identity in symbolic-audit
  std::string output_dir = "weylmech-out";
  std::uint64_t seed = 1;
};

/// Strict JSON parsing. Syntax errors, unknown keys and constraint violations throw
/// ConfigError with exit codes 2, 3 and 4; messages name the offending key.
ScenarioConfig parse_config(std::string_view text);

/// Canonical JSON echo of a config with every default filled in.
std::string config_json(const ScenarioConfig& cfg);

/// Human-readable schema with defaults.
std::string schema_text();

}  // namespace weylmech::cli
