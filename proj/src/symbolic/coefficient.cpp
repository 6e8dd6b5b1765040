#include "weylmech/symbolic/coefficient.hpp"

#include <stdexcept>

namespace weylmech::symbolic {

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  Rational den = o.re * o.re + o.im * o.im;
  if (sgn(den) == 0) throw std::domain_error("division by zero complex rational");
  Rational r = (re * o.re + im * o.im) / den;
  Rational m = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(m);
  return *this;
}

HbarCoefficient HbarCoefficient::monomial(ComplexRational c, std::size_t power) {
  std::vector<ComplexRational> v(power + 1);
  v[power] = std::move(c);
  return HbarCoefficient(std::move(v));
}

ComplexRational HbarCoefficient::at(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : ComplexRational{};
}

HbarCoefficient HbarCoefficient::conj() const {
  HbarCoefficient out = *this;
  for (auto& c : out.coeffs_) c = c.conj();
  return out;
}

HbarCoefficient HbarCoefficient::divide_by_hbar(std::size_t k) const {
  for (std::size_t j = 0; j < k && j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero()) throw std::domain_error("coefficient is not divisible by hbar");
  }
  if (coeffs_.size() <= k) return {};
  return HbarCoefficient(std::vector<ComplexRational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

double HbarCoefficient::evaluate_real(double hbar) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * hbar + it->re.get_d();
  return acc;
}

double HbarCoefficient::evaluate_imag(double hbar) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * hbar + it->im.get_d();
  return acc;
}

HbarCoefficient& HbarCoefficient::operator+=(const HbarCoefficient& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

HbarCoefficient& HbarCoefficient::operator-=(const HbarCoefficient& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

HbarCoefficient& HbarCoefficient::operator*=(const HbarCoefficient& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<ComplexRational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

HbarCoefficient& HbarCoefficient::operator*=(const ComplexRational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

void HbarCoefficient::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

}  // namespace weylmech::symbolic
