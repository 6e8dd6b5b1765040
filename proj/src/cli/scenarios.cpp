#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "json_render.hpp"
#include "weylmech/cli/audit.hpp"
#include "weylmech/cli/runner.hpp"
#include "weylmech/errors.hpp"
#include "weylmech/numeric/snapshot_io.hpp"
#include "weylmech/numeric/weyl_transform.hpp"

namespace weylmech::cli {

namespace {

using numeric::Complex;
using numeric::GridSpec;
using numeric::PhaseField;

double max_abs(const numeric::ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Modulated Gaussian bumps scaled to the box. At the default grid position widths
// are 0.8 to 1.5 and momentum widths 1.2 to 2, which keeps the kernel negligible at
// separation L/2.
PhaseField random_field(const GridSpec& g, std::mt19937_64& rng) {
  auto real = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  const double qs = g.length() / 16, ps = g.n * g.dp() / (2 * 25.132741228718345);
  const double qc = (g.x_min + g.x_max) / 2;
  struct Bump {
    Complex a;
    double q0, p0, sq, sp, kq, kp;
  };
  std::vector<Bump> bs;
  for (int t = std::uniform_int_distribution<int>(1, 3)(rng); t > 0; --t)
    bs.push_back({Complex(real(-1, 1), real(-1, 1)), qc + real(-2, 2) * qs, real(-3, 3) * ps, real(0.8, 1.5) * qs,
                  real(1.2, 2.0) * ps, real(-1, 1) / qs, real(-0.5, 0.5) / ps});
  return PhaseField::sample(g, [&](double q, double p) {
    Complex v;
    for (const auto& b : bs) {
      const double dq = (q - b.q0) / b.sq, dp = (p - b.p0) / b.sp;
      v += b.a * std::exp(-(dq * dq + dp * dp) / 2) * std::exp(Complex(0, b.kq * q + b.kp * p));
    }
    return v;
  });
}

std::string roundtrip_row(const std::string& id, const std::string& kind, const PhaseField& f) {
  const auto op = numeric::inverse_weyl(f);
  const double field_err = max_abs(numeric::weyl_transform(op).values - f.values);
  const double op_err = max_abs(numeric::inverse_weyl(numeric::weyl_transform(op)).entries - op.entries);
  return id + "," + kind + "," + json_number(max_abs(f.values)) + "," + json_number(field_err) + "," +
         json_number(op_err) + "\n";
}

std::vector<OutputFile> roundtrip(const ScenarioConfig& cfg, std::string& summary) {
  std::mt19937_64 rng(cfg.seed);
  std::string csv = "case,kind,field_max,field_roundtrip_error,operator_roundtrip_error\n";
  for (int c = 0; c < cfg.cases; ++c) csv += roundtrip_row(std::to_string(c), "random", random_field(cfg.grid, rng));
  csv += roundtrip_row(std::to_string(cfg.cases), "density", quasidensity::gaussian_mixture_density(cfg.density, cfg.grid));
  summary = "roundtrip: " + std::to_string(cfg.cases + 1) + " fields";
  return {{"roundtrip.csv", csv}};
}

std::vector<OutputFile> gaussian_spectrum(const ScenarioConfig& cfg, std::string& summary) {
  const double hbar = cfg.grid.hbar;
  Json rows = Json::array();
  double purity_at_one = NAN;
  for (int k = 0; k <= 8; ++k) {
    const double x = 0.25 * std::pow(2.0, k / 2.0);  // αβħ² from 1/4 to 4
    const double a = std::sqrt(x) / hbar;
    quasidensity::require_resolved_gaussian(a, a, cfg.grid);
    const auto rho = quasidensity::groenewold_from_density(quasidensity::gaussian_class_density(a, a, cfg.grid),
                                                            "gaussian");
    const auto rep = quasidensity::spectrum_diagnostics(rho);
    if (k == 4) purity_at_one = rep.purity;
    Json row = {{"alpha_beta_hbar2", x}, {"alpha", a}, {"beta", a}};
    const Json stats = Json::parse(quasidensity::to_json(rep));
    for (const auto& [key, v] : stats.items()) row[key] = v;
    rows.push_back(row);
  }
  Json j = {{"hbar", hbar}, {"rows", rows}};
  summary = "gaussian-spectrum: 9 rows, purity at alpha*beta*hbar^2 = 1 is " + json_number(purity_at_one);
  return {{"spectrum.json", render(j)}};
}

std::vector<OutputFile> audit(const ScenarioConfig& cfg, std::string& summary) {
  const auto rep = symbolic_audit(cfg.seed, cfg.cases);
  int failed = 0;
  for (const auto& r : rep.rows) failed += r.passed() ? 0 : 1;
  for (const auto& r : rep.records) failed += r.matches_oracle() ? 0 : 1;
  summary = std::string("symbolic-audit: ") + (rep.passed() ? "all checks pass" : std::to_string(failed) + " checks FAIL");
  return {{"audit.csv", rep.csv()}, {"audit.json", rep.json()}};
}

std::vector<OutputFile> evolve(const ScenarioConfig& cfg, std::string& summary) {
  const auto rho0 = quasidensity::groenewold_from_density(
      quasidensity::gaussian_mixture_density(cfg.density, cfg.grid), "gaussian mixture");
  const auto rec = evolution::integrate(rho0, cfg.potential, cfg.evolution);
  if (rec.aborted())
    throw InstabilityError("evolution aborted at t = " + json_number(rec.times.back()) + ": " + rec.abort_reason);
  std::ostringstream traj;
  evolution::write_csv(traj, rec);
  std::vector<OutputFile> out{{"trajectory.csv", traj.str()}};
  if (cfg.write_snapshots)
    for (std::size_t s = 0; s < rec.snapshots.size(); ++s) {
      std::ostringstream bin;
      numeric::write_snapshot(bin, rec.snapshots[s]);
      char name[32];
      std::snprintf(name, sizeof name, "snapshot_%04zu.bin", s);
      out.emplace_back(name, bin.str());
    }
  const auto& last = rec.monitors.back();
  summary = "evolve: " + std::to_string(rec.times.size()) + " records, final trace " + json_number(last.trace) +
            ", energy " + json_number(last.energy);
  return out;
}

std::vector<OutputFile> compare(const ScenarioConfig& cfg, std::string& summary) {
  const auto rep = evolution::compare_evolutions(quasidensity::gaussian_mixture_density(cfg.density, cfg.grid),
                                                 cfg.potential, cfg.evolution);
  double worst = 0;
  for (double d : rep.field_distance) worst = std::max(worst, d);
  summary = "compare: max field distance " + json_number(worst);
  return {{"error_report.json", render(Json::parse(evolution::to_json(rep)))}};
}

}  // namespace

std::vector<OutputFile> scenario_outputs(const ScenarioConfig& cfg, std::string& summary) {
  switch (cfg.scenario) {
    case Scenario::roundtrip: return roundtrip(cfg, summary);
    case Scenario::gaussian_spectrum: return gaussian_spectrum(cfg, summary);
    case Scenario::symbolic_audit: return audit(cfg, summary);
    case Scenario::evolve: return evolve(cfg, summary);
    case Scenario::compare: return compare(cfg, summary);
  }
  throw std::logic_error("unhandled scenario");
}

}  // namespace weylmech::cli
