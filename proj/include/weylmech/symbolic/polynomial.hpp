#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <utility>

#include "weylmech/symbolic/coefficient.hpp"

namespace weylmech::symbolic {

/// Exponent pair: first is the power of q (or q̂, on the left), second the power of p (or p̂).
using Exponents = std::pair<int, int>;

/// Sparse exact polynomial over HbarCoefficient with lexicographic term order.
/// Zero coefficients are never stored.
template <typename Tag>
class SparsePolynomial {
 public:
  using TermMap = std::map<Exponents, HbarCoefficient>;

  SparsePolynomial() = default;
  SparsePolynomial(HbarCoefficient c) { add_term({0, 0}, std::move(c)); }
  SparsePolynomial(long c) : SparsePolynomial(HbarCoefficient(c)) {}

  static SparsePolynomial monomial(int q_power, int p_power, HbarCoefficient c = 1) {
    SparsePolynomial out;
    out.add_term({q_power, p_power}, std::move(c));
    return out;
  }

  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] HbarCoefficient coefficient(int q_power, int p_power) const {
    auto it = terms_.find({q_power, p_power});
    return it == terms_.end() ? HbarCoefficient{} : it->second;
  }
  /// Maximum q-power + p-power over stored terms (0 for the zero polynomial).
  [[nodiscard]] int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }
  [[nodiscard]] bool has_real_coefficients() const {
    for (const auto& [e, c] : terms_)
      for (const auto& x : c.coeffs())
        if (!x.is_real()) return false;
    return true;
  }

  void add_term(Exponents e, const HbarCoefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePolynomial& operator*=(const HbarCoefficient& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator-(SparsePolynomial a) { return a *= HbarCoefficient(-1); }
  friend SparsePolynomial operator*(SparsePolynomial a, const HbarCoefficient& s) { return a *= s; }
  friend SparsePolynomial operator*(const HbarCoefficient& s, SparsePolynomial a) { return a *= s; }
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

struct PhaseTag {};
struct OperatorTag {};

/// Commutative polynomial A(q, p) with hbar-polynomial coefficients.
using PhasePolynomial = SparsePolynomial<PhaseTag>;

/// Element of the Weyl algebra stored in normal form: term (r, s) is q̂^r p̂^s,
/// with p̂ q̂ = q̂ p̂ − iħ.
using OperatorPolynomial = SparsePolynomial<OperatorTag>;

// Commutative product of phase-space polynomials.
PhasePolynomial operator*(const PhasePolynomial& a, const PhasePolynomial& b);

// Weyl-algebra product, reduced to normal form.
OperatorPolynomial operator*(const OperatorPolynomial& a, const OperatorPolynomial& b);

/// Partial derivative of a phase polynomial, applied `order` times along q or p.
enum class Axis { q, p };
PhasePolynomial derivative(const PhasePolynomial& a, Axis axis, int order = 1);

/// Sets every hbar power above zero to zero.
template <typename Tag>
SparsePolynomial<Tag> at_zero_hbar(const SparsePolynomial<Tag>& a) {
  SparsePolynomial<Tag> out;
  for (const auto& [e, c] : a.terms()) out.add_term(e, HbarCoefficient(c.at_zero_hbar()));
  return out;
}

/// Divides every coefficient by hbar^k; throws std::domain_error if not divisible.
template <typename Tag>
SparsePolynomial<Tag> divide_by_hbar(const SparsePolynomial<Tag>& a, std::size_t k = 1) {
  SparsePolynomial<Tag> out;
  for (const auto& [e, c] : a.terms()) out.add_term(e, c.divide_by_hbar(k));
  return out;
}

/// Numeric value of a phase polynomial at (q, p) for a concrete hbar; returns (re, im).
std::pair<double, double> evaluate(const PhasePolynomial& a, double q, double p, double hbar);

}  // namespace weylmech::symbolic
