#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace weylmech::symbolic {

using Rational = mpq_class;

/// Exact complex number with rational real and imaginary parts.
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  ComplexRational() = default;
  ComplexRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }
  ComplexRational(long r) : re(r), im(0) {}

  static ComplexRational i() { return {0, 1}; }

  [[nodiscard]] bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  [[nodiscard]] bool is_real() const { return sgn(im) == 0; }
  [[nodiscard]] ComplexRational conj() const { return {re, -im}; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational m = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(m);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Polynomial in the formal parameter hbar; entry k is the coefficient of hbar^k.
/// Trailing zeros are always trimmed, so the zero polynomial has no entries.
class HbarCoefficient {
 public:
  HbarCoefficient() = default;
  HbarCoefficient(ComplexRational c) { coeffs_.push_back(std::move(c)); trim(); }
  HbarCoefficient(long c) : HbarCoefficient(ComplexRational(c)) {}
  explicit HbarCoefficient(std::vector<ComplexRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// c * hbar^power
  static HbarCoefficient monomial(ComplexRational c, std::size_t power);
  static HbarCoefficient hbar(std::size_t power = 1) { return monomial(1, power); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Highest hbar power present; meaningless for zero.
  [[nodiscard]] std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  [[nodiscard]] const std::vector<ComplexRational>& coeffs() const { return coeffs_; }
  /// Coefficient of hbar^k (zero beyond the stored range).
  [[nodiscard]] ComplexRational at(std::size_t k) const;

  [[nodiscard]] HbarCoefficient conj() const;
  /// Value with hbar set to the formal value zero.
  [[nodiscard]] ComplexRational at_zero_hbar() const { return at(0); }
  /// Divides by hbar^k; throws std::domain_error when lower powers are nonzero.
  [[nodiscard]] HbarCoefficient divide_by_hbar(std::size_t k = 1) const;
  [[nodiscard]] double evaluate_real(double hbar) const;
  [[nodiscard]] double evaluate_imag(double hbar) const;

  HbarCoefficient& operator+=(const HbarCoefficient& o);
  HbarCoefficient& operator-=(const HbarCoefficient& o);
  HbarCoefficient& operator*=(const HbarCoefficient& o);
  HbarCoefficient& operator*=(const ComplexRational& c);

  friend HbarCoefficient operator+(HbarCoefficient a, const HbarCoefficient& b) { return a += b; }
  friend HbarCoefficient operator-(HbarCoefficient a, const HbarCoefficient& b) { return a -= b; }
  friend HbarCoefficient operator*(HbarCoefficient a, const HbarCoefficient& b) { return a *= b; }
  friend HbarCoefficient operator*(HbarCoefficient a, const ComplexRational& c) { return a *= c; }
  friend HbarCoefficient operator-(HbarCoefficient a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend bool operator==(const HbarCoefficient& a, const HbarCoefficient& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<ComplexRational> coeffs_;
};

Rational binomial(long n, long k);
Rational factorial(long n);

}  // namespace weylmech::symbolic
