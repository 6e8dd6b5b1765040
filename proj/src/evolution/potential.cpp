#include "weylmech/evolution/potential.hpp"

#include <cmath>
#include <string>

#include "weylmech/errors.hpp"

namespace weylmech::evolution {

std::string_view kind_name(PotentialKind k) {
  switch (k) {
    case PotentialKind::harmonic: return "harmonic";
    case PotentialKind::quartic: return "quartic";
    case PotentialKind::polynomial: return "polynomial";
  }
  return "polynomial";
}

PotentialKind kind_from_name(std::string_view name) {
  if (name == "harmonic") return PotentialKind::harmonic;
  if (name == "quartic") return PotentialKind::quartic;
  if (name == "polynomial") return PotentialKind::polynomial;
  throw PreconditionError("unknown potential kind '" + std::string(name) + "'");
}

PotentialSpec PotentialSpec::harmonic(double mass, double omega) {
  return {PotentialKind::harmonic, {0.0, 0.0, 0.5 * mass * omega * omega}, mass};
}

PotentialSpec PotentialSpec::quartic(double lambda, double c2, double mass) {
  return {PotentialKind::quartic, {0.0, 0.0, c2, 0.0, lambda}, mass};
}

int PotentialSpec::degree() const {
  int d = static_cast<int>(coefficients.size()) - 1;
  while (d >= 0 && coefficients[static_cast<std::size_t>(d)] == 0.0) --d;
  return d;
}

void PotentialSpec::validate() const {
  if (!(mass > 0) || !std::isfinite(mass)) throw PreconditionError("mass must be positive");
  for (double c : coefficients)
    if (!std::isfinite(c)) throw PreconditionError("potential coefficients must be finite");
  const int d = degree();
  if (d > kMaxPotentialDegree) throw PreconditionError("potential degree " + std::to_string(d) + " exceeds 6");
  if (kind == PotentialKind::harmonic && d > 2) throw PreconditionError("harmonic potential must have degree ≤ 2");
  if (kind == PotentialKind::quartic && d != 4) throw PreconditionError("quartic potential must have degree 4");
}

double PotentialSpec::derivative(double q, int order) const {
  // Horner on the differentiated coefficients
  double v = 0.0;
  for (int k = static_cast<int>(coefficients.size()) - 1; k >= order; --k) {
    double falling = 1.0;
    for (int j = 0; j < order; ++j) falling *= k - j;
    v = v * q + falling * coefficients[static_cast<std::size_t>(k)];
  }
  return v;
}

}  // namespace weylmech::evolution
