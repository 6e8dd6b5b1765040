#include "weylmech/cli/config.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>

#include "config_object.hpp"
#include "weylmech/errors.hpp"

namespace weylmech::cli {

namespace {

using evolution::PotentialKind;
using evolution::PotentialSpec;

[[noreturn]] void constraint(const std::string& key, const std::string& what) {
  throw ConfigError(kConstraint, "'" + key + "': " + what);
}

std::string join(const std::string& prefix, const std::string& key) { return prefix.empty() ? key : prefix + "." + key; }

void require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) constraint(where.empty() ? "<root>" : where, "must be an object");
}

void check_keys(const Json& j, const std::string& where, std::initializer_list<std::string_view> allowed) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || k == a;
    if (!known) throw ConfigError(kUnknownKey, "unknown key '" + join(where, k) + "'");
  }
}

double number(const Json& j, const std::string& where, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number()) constraint(join(where, key), "must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) constraint(join(where, key), "must be finite");
  return d;
}

std::int64_t integer(const Json& j, const std::string& where, const char* key, std::int64_t fallback, std::int64_t lo,
                     std::int64_t hi) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_integer()) constraint(join(where, key), "must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(hi))
    constraint(join(where, key), "must be at most " + std::to_string(hi));
  const auto x = v.get<std::int64_t>();
  if (x < lo || x > hi) constraint(join(where, key), "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x;
}

Scenario scenario_from(const Json& root) {
  if (!root.contains("scenario")) constraint("scenario", "is required");
  const Json& v = root.at("scenario");
  if (!v.is_string()) constraint("scenario", "must be a string");
  const auto s = v.get<std::string>();
  for (Scenario c : {Scenario::roundtrip, Scenario::gaussian_spectrum, Scenario::symbolic_audit, Scenario::evolve,
                     Scenario::compare})
    if (s == scenario_name(c)) return c;
  constraint("scenario", "must be one of roundtrip, gaussian-spectrum, symbolic-audit, evolve, compare");
}

numeric::GridSpec grid_from(const Json& root, Scenario s) {
  numeric::GridSpec g;
  // the spectrum sweep reaches αβħ² = 4, which needs a wider box than the default
  if (s == Scenario::gaussian_spectrum) g = {256, -16.0, 16.0, 1.0};
  if (!root.contains("grid")) return g;
  const Json& j = root.at("grid");
  require_object(j, "grid");
  check_keys(j, "grid", {"n", "x_min", "x_max", "hbar"});
  g.n = static_cast<std::size_t>(integer(j, "grid", "n", static_cast<std::int64_t>(g.n), 8, 4096));
  g.x_min = number(j, "grid", "x_min", g.x_min);
  g.x_max = number(j, "grid", "x_max", g.x_max);
  g.hbar = number(j, "grid", "hbar", g.hbar);
  try {
    g.validate();
  } catch (const GridError& e) {
    constraint("grid", e.what());
  }
  return g;
}

quasidensity::GaussianComponent component_from(const Json& j, const std::string& where, bool with_weight) {
  require_object(j, where);
  if (with_weight)
    check_keys(j, where, {"weight", "alpha", "beta", "q0", "p0"});
  else
    check_keys(j, where, {"alpha", "beta", "q0", "p0"});
  quasidensity::GaussianComponent c;
  c.weight = with_weight ? number(j, where, "weight", 1.0) : 1.0;
  c.alpha = number(j, where, "alpha", 1.0);
  c.beta = number(j, where, "beta", 1.0);
  c.q0 = number(j, where, "q0", 0.0);
  c.p0 = number(j, where, "p0", 0.0);
  if (!(c.weight > 0)) constraint(join(where, "weight"), "must be positive");
  if (!(c.alpha > 0)) constraint(join(where, "alpha"), "must be positive");
  if (!(c.beta > 0)) constraint(join(where, "beta"), "must be positive");
  return c;
}

std::vector<quasidensity::GaussianComponent> density_from(const Json& root) {
  if (!root.contains("density")) return {quasidensity::GaussianComponent{}};
  const Json& j = root.at("density");
  if (j.is_object()) return {component_from(j, "density", false)};
  if (!j.is_array() || j.empty()) constraint("density", "must be an object or a non-empty array of mixture components");
  std::vector<quasidensity::GaussianComponent> out;
  double total = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(component_from(j[i], "density[" + std::to_string(i) + "]", true));
    total += out.back().weight;
  }
  if (std::abs(total - 1.0) > 1e-12) constraint("density", "mixture weights must sum to 1");
  return out;
}

PotentialSpec potential_from(const Json& root) {
  PotentialSpec pot;
  if (!root.contains("potential")) return pot;
  const Json& j = root.at("potential");
  require_object(j, "potential");
  check_keys(j, "potential", {"kind", "coefficients", "mass"});
  if (j.contains("kind")) {
    if (!j.at("kind").is_string()) constraint("potential.kind", "must be a string");
    try {
      pot.kind = evolution::kind_from_name(j.at("kind").get<std::string>());
    } catch (const PreconditionError&) {
      constraint("potential.kind", "must be one of harmonic, quartic, polynomial");
    }
  }
  if (j.contains("coefficients")) {
    const Json& c = j.at("coefficients");
    if (!c.is_array() || c.empty()) constraint("potential.coefficients", "must be a non-empty array of numbers");
    pot.coefficients.clear();
    for (const auto& v : c) {
      if (!v.is_number() || !std::isfinite(v.get<double>()))
        constraint("potential.coefficients", "must contain finite numbers");
      pot.coefficients.push_back(v.get<double>());
    }
  } else if (pot.kind == PotentialKind::quartic) {
    pot.coefficients = {0.0, 0.0, 0.0, 0.0, 0.25};
  } else if (pot.kind == PotentialKind::polynomial) {
    constraint("potential.coefficients", "is required for a polynomial potential");
  }
  pot.mass = number(j, "potential", "mass", pot.mass);
  try {
    pot.validate();
  } catch (const PreconditionError& e) {
    constraint("potential", e.what());
  }
  return pot;
}

evolution::EvolutionConfig evolution_from(const Json& root) {
  evolution::EvolutionConfig cfg;
  if (!root.contains("evolution")) return cfg;
  const Json& j = root.at("evolution");
  require_object(j, "evolution");
  check_keys(j, "evolution", {"dt", "t_final", "truncation_order", "snapshot_stride"});
  cfg.dt = number(j, "evolution", "dt", cfg.dt);
  cfg.t_final = number(j, "evolution", "t_final", cfg.t_final);
  cfg.truncation_order = static_cast<int>(integer(j, "evolution", "truncation_order", cfg.truncation_order, 0, 2));
  cfg.snapshot_stride = static_cast<int>(
      integer(j, "evolution", "snapshot_stride", cfg.snapshot_stride, 1, std::numeric_limits<int>::max()));
  if (!(cfg.dt > 0)) constraint("evolution.dt", "must be positive");
  if (cfg.t_final < 0) constraint("evolution.t_final", "must be non-negative");
  try {
    cfg.validate();
  } catch (const PreconditionError& e) {
    constraint("evolution", e.what());
  }
  return cfg;
}

}  // namespace

std::string_view scenario_name(Scenario s) {
  switch (s) {
    case Scenario::roundtrip: return "roundtrip";
    case Scenario::gaussian_spectrum: return "gaussian-spectrum";
    case Scenario::symbolic_audit: return "symbolic-audit";
    case Scenario::evolve: return "evolve";
    case Scenario::compare: return "compare";
  }
  return "roundtrip";
}

ScenarioConfig parse_config(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ConfigError(kSyntax, std::string("syntax error: ") + e.what());
  }
  require_object(root, "");
  check_keys(root, "", {"scenario", "grid", "density", "potential", "evolution", "write_snapshots", "cases",
                        "output_dir", "seed"});
  ScenarioConfig cfg;
  cfg.scenario = scenario_from(root);
  cfg.grid = grid_from(root, cfg.scenario);
  cfg.density = density_from(root);
  cfg.potential = potential_from(root);
  cfg.evolution = evolution_from(root);
  if (root.contains("write_snapshots")) {
    if (!root.at("write_snapshots").is_boolean()) constraint("write_snapshots", "must be true or false");
    cfg.write_snapshots = root.at("write_snapshots").get<bool>();
  }
  cfg.cases = static_cast<int>(integer(root, "", "cases", cfg.cases, 1, 100000));
  if (root.contains("output_dir")) {
    const Json& v = root.at("output_dir");
    if (!v.is_string() || v.get<std::string>().empty()) constraint("output_dir", "must be a non-empty string");
    cfg.output_dir = v.get<std::string>();
  }
  if (root.contains("seed")) {
    const Json& v = root.at("seed");
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
      constraint("seed", "must be a non-negative integer");
    cfg.seed = v.get<std::uint64_t>();
  }
  return cfg;
}

Json config_object(const ScenarioConfig& cfg) {
  Json j;
  j["scenario"] = scenario_name(cfg.scenario);
  j["grid"] = {{"n", cfg.grid.n}, {"x_min", cfg.grid.x_min}, {"x_max", cfg.grid.x_max}, {"hbar", cfg.grid.hbar}};
  Json density = Json::array();
  for (const auto& c : cfg.density)
    density.push_back({{"weight", c.weight}, {"alpha", c.alpha}, {"beta", c.beta}, {"q0", c.q0}, {"p0", c.p0}});
  j["density"] = density;
  j["potential"] = {{"kind", evolution::kind_name(cfg.potential.kind)},
                    {"coefficients", cfg.potential.coefficients},
                    {"mass", cfg.potential.mass}};
  j["evolution"] = {{"dt", cfg.evolution.dt},
                    {"t_final", cfg.evolution.t_final},
                    {"truncation_order", cfg.evolution.truncation_order},
                    {"snapshot_stride", cfg.evolution.snapshot_stride}};
  j["write_snapshots"] = cfg.write_snapshots;
  j["cases"] = cfg.cases;
  j["output_dir"] = cfg.output_dir;
  j["seed"] = cfg.seed;
  return j;
}

std::string config_json(const ScenarioConfig& cfg) { return render(config_object(cfg)); }

std::string schema_text() {
  return R"(weylmech run --config <file.json> [--out <dir>] [--seed <n>]

Configuration is a JSON object. Unknown keys are rejected.

  scenario          string, required: roundtrip | gaussian-spectrum | symbolic-audit | evolve | compare
  grid              object
    n               integer, power of two >= 8            default 128 (256 for gaussian-spectrum)
    x_min           number                                default -8  (-16 for gaussian-spectrum)
    x_max           number, > x_min                       default 8   (16 for gaussian-spectrum)
    hbar            number, > 0                           default 1
  density           object {alpha, beta, q0, p0} or array of {weight, alpha, beta, q0, p0}
                    Gaussian sqrt(alpha*beta)/pi * exp(-alpha (q-q0)^2 - beta (p-p0)^2);
                    defaults alpha = beta = 1, q0 = p0 = 0, weight 1; weights must sum to 1
  potential         object
    kind            harmonic | quartic | polynomial       default harmonic
    coefficients    [c0, c1, ...], V(q) = sum c_k q^k,    default [0, 0, 0.5] (quartic: [0, 0, 0, 0, 0.25]);
                    degree <= 6, harmonic <= 2, quartic exactly 4
    mass            number, > 0                           default 1
  evolution         object
    dt              number, > 0, divides t_final          default 0.001
    t_final         number, >= 0                          default 1
    truncation_order 0 | 1 | 2                            default 2
    snapshot_stride integer >= 1                          default 100
  write_snapshots   boolean, evolve writes binary states  default true
  cases             integer >= 1: random fields (roundtrip), instances per identity (symbolic-audit)
                                                          default 8
  output_dir        string                                default "weylmech-out"
  seed              non-negative integer                  default 1

Scenarios and outputs (every run also writes manifest.json with SHA-256 of each file):
  roundtrip          roundtrip.csv        transform roundtrip error norms on random Gaussian-enveloped fields
  gaussian-spectrum  spectrum.json        spectra over alpha*beta*hbar^2 in [0.25, 4] (alpha = beta)
  symbolic-audit     audit.csv, audit.json  exact identity checks and the q^2*p^3 star-product record
  evolve             trajectory.csv, snapshot_NNNNNN.bin
  compare            error_report.json

Exit codes: 0 success, 2 syntax error, 3 unknown key, 4 constraint violation, 5 runtime error.
)";
}

}  // namespace weylmech::cli
