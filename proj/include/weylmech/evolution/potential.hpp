#pragma once

#include <string_view>
#include <vector>

namespace weylmech::evolution {

enum class PotentialKind { harmonic, quartic, polynomial };

std::string_view kind_name(PotentialKind k);
PotentialKind kind_from_name(std::string_view name);

inline constexpr int kMaxPotentialDegree = 6;

/// H(q, p) = p²/(2m) + V(q) with V(q) = Σ c_k q^k.
struct PotentialSpec {
  PotentialKind kind = PotentialKind::harmonic;
  std::vector<double> coefficients{0.0, 0.0, 0.5};
  double mass = 1.0;

  /// V = ½·m·ω²·q².
  static PotentialSpec harmonic(double mass = 1.0, double omega = 1.0);
  /// V = λq⁴ + c2·q².
  static PotentialSpec quartic(double lambda, double c2 = 0.0, double mass = 1.0);

  /// Throws PreconditionError for degree > 6, non-positive mass, non-finite
  /// coefficients, or a degree that does not fit the kind (harmonic ≤ 2, quartic = 4).
  void validate() const;

  /// Degree after trimming trailing zero coefficients (−1 for V ≡ 0).
  [[nodiscard]] int degree() const;
  /// d^order V / dq^order at q, from the coefficients.
  [[nodiscard]] double derivative(double q, int order = 0) const;
  [[nodiscard]] double value(double q) const { return derivative(q, 0); }
  [[nodiscard]] double energy(double q, double p) const { return p * p / (2 * mass) + value(q); }
};

}  // namespace weylmech::evolution
