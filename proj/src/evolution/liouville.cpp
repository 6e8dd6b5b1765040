#include <algorithm>
#include <cmath>
#include <numbers>

#include "weylmech/errors.hpp"
#include "weylmech/evolution/evolution.hpp"
#include "weylmech/json_text.hpp"

#include "batched_fft.hpp"

namespace weylmech::evolution {

using numeric::Complex;

namespace {

// Multipliers that shift column c of periodic samples (period `period`) by a[c]:
// f(u) -> f(u − a). The Nyquist mode gets a cosine so real data stays real.
ComplexMatrix shift_table(std::size_t n, double period, const std::vector<double>& a) {
  ComplexMatrix t(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) {
      const double k = r < n / 2 ? static_cast<double>(r) : static_cast<double>(r) - static_cast<double>(n);
      const double phase = 2 * std::numbers::pi * k / period * a[c];
      const Complex m = 2 * r == n ? Complex(std::cos(phase)) : std::polar(1.0, -phase);
      t(r, c) = m / static_cast<double>(n);
    }
  return t;
}

}  // namespace

LiouvilleTrajectory liouville_reference(const PhaseField& rho0, const PotentialSpec& pot, const EvolutionConfig& cfg) {
  cfg.validate();
  pot.validate();
  const GridSpec& g = rho0.grid;
  g.validate();
  numeric::require_finite(rho0.values, "classical density");
  if (rho0.role != numeric::Role::density) throw PreconditionError("classical reference needs a field tagged density");
  const std::size_t n = g.n;
  const double dt = cfg.dt;

  std::vector<double> drift(n), kick(n);
  double pmax = 0, fmax = 0;
  for (std::size_t k = 0; k < n; ++k) {
    drift[k] = g.p(k) * dt / (2 * pot.mass);
    pmax = std::max(pmax, std::abs(g.p(k)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double f = pot.derivative(g.x(i), 1);
    kick[i] = -f * dt;
    fmax = std::max(fmax, std::abs(f));
  }
  const double p_period = static_cast<double>(n) * g.dp();
  if (pmax * dt / pot.mass > g.length() / 2 || fmax * dt > p_period / 2)
    throw PreconditionError("classical step displaces a sample by more than half the box; reduce dt below " +
                            json_number(std::min(g.length() * pot.mass / (2 * pmax), p_period / (2 * fmax))));

  // kinetic shears act on columns (fixed p), force shears on rows (fixed q)
  const ComplexMatrix drift_table = shift_table(n, g.length(), drift);
  const ComplexMatrix kick_table = shift_table(n, p_period, kick);
  const detail::BatchedFft fft(static_cast<int>(n));
  ComplexMatrix f = rho0.values.real().cast<Complex>(), spec, tmp;

  auto half_kinetic = [&] {
    fft.forward(f, spec);
    spec.array() *= drift_table.array();
    fft.backward(spec, tmp);
    f = tmp.real().cast<Complex>();
  };
  auto force_kick = [&] {
    tmp = f.transpose();
    fft.forward(tmp, spec);
    spec.array() *= kick_table.array();
    fft.backward(spec, tmp);
    f = tmp.transpose().real().cast<Complex>();
  };

  LiouvilleTrajectory out;
  out.times.push_back(0.0);
  out.fields.emplace_back(g, f, numeric::Role::density);
  const std::size_t steps = cfg.steps();
  const auto stride = static_cast<std::size_t>(cfg.snapshot_stride);
  for (std::size_t s = 1; s <= steps; ++s) {
    half_kinetic();
    force_kick();
    half_kinetic();
    if (s % stride == 0 || s == steps) {
      out.times.push_back(static_cast<double>(s) * dt);
      out.fields.emplace_back(g, f, numeric::Role::density);
    }
  }
  return out;
}

}  // namespace weylmech::evolution
