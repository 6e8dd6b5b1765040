#include "weylmech/cli/runner.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <Eigen/Core>
#include <fftw3.h>
#include <gmp.h>
#include <openssl/evp.h>
#include <openssl/opensslv.h>

#include "config_object.hpp"

namespace weylmech::cli {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

namespace {

// Only plain names are ever emitted, so anything else in an old manifest is left alone.
bool plain_name(const std::string& name) {
  return !name.empty() && name != "." && name != ".." && name.find('/') == std::string::npos &&
         name.find('\\') == std::string::npos;
}

void remove_previous(const fs::path& dir) {
  const fs::path manifest = dir / "manifest.json";
  if (!fs::exists(manifest)) return;
  std::ifstream in(manifest);
  std::stringstream text;
  text << in.rdbuf();
  const Json old = Json::parse(text.str(), nullptr, false);
  if (old.is_object() && old.contains("files") && old["files"].is_array())
    for (const auto& f : old["files"])
      if (f.is_object() && f.contains("name") && f["name"].is_string() && plain_name(f["name"].get<std::string>()))
        fs::remove(dir / f["name"].get<std::string>());
  fs::remove(manifest);
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

Json versions() {
  return {{"weylmech", std::string(kVersion)},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)},
          {"gmp", std::string(gmp_version)},
          {"fftw", std::string(fftw_version)},
          {"openssl", std::string(OPENSSL_VERSION_TEXT)},
          {"compiler", std::string(__VERSION__)}};
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  std::vector<OutputFile> files;
  try {
    files = scenario_outputs(cfg, result.message);
  } catch (const std::exception& e) {
    return {kRuntime, std::string(scenario_name(cfg.scenario)) + " failed: " + e.what(), {}};
  }

  const fs::path dir(cfg.output_dir);
  std::vector<fs::path> written;
  try {
    fs::create_directories(dir);
    remove_previous(dir);
    Json listing = Json::array();
    for (const auto& [name, bytes] : files) {
      write_file(dir / name, bytes);
      written.push_back(dir / name);
      listing.push_back({{"name", name}, {"bytes", bytes.size()}, {"sha256", sha256_hex(bytes)}});
      result.files.push_back(name);
    }
    Json manifest = {{"version", std::string(kVersion)},
                     {"scenario", std::string(scenario_name(cfg.scenario))},
                     {"seed", cfg.seed},
                     {"config", config_object(cfg)},
                     {"versions", versions()},
                     {"files", listing}};
    manifest["wall_time_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_file(dir / "manifest.json", render(manifest));
    result.files.push_back("manifest.json");
  } catch (const std::exception& e) {
    std::error_code ec;
    for (const auto& p : written) fs::remove(p, ec);
    fs::remove(dir / "manifest.json", ec);
    return {kRuntime, std::string("writing outputs failed: ") + e.what(), {}};
  }
  return result;
}

}  // namespace weylmech::cli
