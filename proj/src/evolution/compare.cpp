#include <cmath>

#include "weylmech/errors.hpp"
#include "weylmech/evolution/evolution.hpp"
#include "weylmech/json_text.hpp"
#include "weylmech/numeric/weyl_transform.hpp"

namespace weylmech::evolution {

namespace {

struct Moments {
  double q = 0, p = 0, q2 = 0, energy = 0;
};

Moments classical_moments(const PhaseField& f, const PotentialSpec& pot) {
  const auto& g = f.grid;
  Moments m;
  for (std::size_t k = 0; k < g.n; ++k)
    for (std::size_t i = 0; i < g.n; ++i) {
      const double w = f.values(i, k).real() * g.cell();
      const double q = g.x(i), p = g.p(k);
      m.q += q * w;
      m.p += p * w;
      m.q2 += q * q * w;
      m.energy += pot.energy(q, p) * w;
    }
  return m;
}

}  // namespace

ErrorReport compare_evolutions(const PhaseField& rho0, const PotentialSpec& pot, const EvolutionConfig& cfg) {
  const auto quantum = integrate(quasidensity::groenewold_from_density(rho0), pot, cfg);
  if (quantum.aborted()) throw InstabilityError(quantum.abort_reason);
  const auto classical = liouville_reference(rho0, pot, cfg);
  const Hamiltonian h(rho0.grid, pot);

  ErrorReport r;
  for (std::size_t s = 0; s < quantum.snapshots.size(); ++s) {
    const auto& rho = quantum.snapshots[s];
    const PhaseField w = numeric::wigner_of(rho);
    const PhaseField& c = classical.fields.at(s);
    const Monitors mq = measure(rho, h, false);
    const Moments mc = classical_moments(c, pot);
    r.times.push_back(quantum.snapshot_times[s]);
    r.field_distance.push_back((w.values.real() - c.values.real()).cwiseAbs().maxCoeff());
    r.dq.push_back(std::abs(mq.q - mc.q));
    r.dp.push_back(std::abs(mq.p - mc.p));
    r.dq2.push_back(std::abs(mq.q2 - mc.q2));
    r.dH.push_back(std::abs(mq.energy - mc.energy));
  }
  return r;
}

std::string to_json(const ErrorReport& r) {
  return "{\"times\": " + json_array(r.times) + ", \"field_distance\": " + json_array(r.field_distance) +
         ", \"dq\": " + json_array(r.dq) + ", \"dp\": " + json_array(r.dp) + ", \"dq2\": " + json_array(r.dq2) +
         ", \"dH\": " + json_array(r.dH) + "}";
}

}  // namespace weylmech::evolution
