#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "weylmech/cli/config.hpp"
#include "weylmech/cli/runner.hpp"

using namespace weylmech::cli;

int main(int argc, char** argv) {
  CLI::App app{"Phase-space quantization toolkit: exact Weyl algebra, discrete transforms, quasidensities, dynamics"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  std::uint64_t seed = 0;
  auto* run = app.add_subcommand("run", "Run one scenario described by a JSON config");
  run->add_option("--config", config_path, "Config file (JSON)")->required();
  auto* out_opt = run->add_option("--out", out_dir, "Output directory, overrides output_dir");
  auto* seed_opt = run->add_option("--seed", seed, "Seed, overrides seed");
  run->footer(schema_text());
  auto* schema = app.add_subcommand("schema", "Print the config schema with defaults");
  auto* version = app.add_subcommand("version", "Print the version string recorded in manifests");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kSyntax;
  }

  if (*schema) {
    std::cout << schema_text();
    return kOk;
  }
  if (*version) {
    std::cout << kVersion << "\n";
    return kOk;
  }

  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read config file " << config_path << "\n";
    return kRuntime;
  }
  std::stringstream text;
  text << in.rdbuf();
  ScenarioConfig cfg;
  try {
    cfg = parse_config(text.str());
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return e.code();
  }
  if (*out_opt) cfg.output_dir = out_dir;
  if (*seed_opt) cfg.seed = seed;

  const RunResult r = run_scenario(cfg);
  if (r.code != kOk) {
    std::cerr << "error: " << r.message << "\n";
    return r.code;
  }
  std::cout << r.message << "\nwrote " << r.files.size() << " files to " << cfg.output_dir << "\n";
  return kOk;
}
