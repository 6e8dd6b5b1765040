#include "weylmech/symbolic/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace weylmech::symbolic {

namespace {

// p̂^b q̂^c = Σ_k k! C(b,k) C(c,k) (−iħ)^k q̂^{c−k} p̂^{b−k}
OperatorPolynomial reorder_p_then_q(int b, int c) {
  OperatorPolynomial out;
  for (int k = 0; k <= std::min(b, c); ++k) {
    Rational w = factorial(k) * binomial(b, k) * binomial(c, k);
    ComplexRational minus_i_pow = 1;
    for (int j = 0; j < k; ++j) minus_i_pow *= ComplexRational(0, -1);
    out.add_term({c - k, b - k}, HbarCoefficient::monomial(minus_i_pow * ComplexRational(w), static_cast<std::size_t>(k)));
  }
  return out;
}

PhasePolynomial derivative_once(const PhasePolynomial& a, Axis axis) {
  PhasePolynomial out;
  for (const auto& [e, c] : a.terms()) {
    auto [r, s] = e;
    if (axis == Axis::q && r > 0) out.add_term({r - 1, s}, c * ComplexRational(r));
    if (axis == Axis::p && s > 0) out.add_term({r, s - 1}, c * ComplexRational(s));
  }
  return out;
}

}  // namespace

PhasePolynomial operator*(const PhasePolynomial& a, const PhasePolynomial& b) {
  PhasePolynomial out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

OperatorPolynomial operator*(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  OperatorPolynomial out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      // q̂^r1 (p̂^s1 q̂^r2) p̂^s2
      const HbarCoefficient c = ca * cb;
      const OperatorPolynomial middle = reorder_p_then_q(ea.second, eb.first);
      for (const auto& [mid, cm] : middle.terms())
        out.add_term({ea.first + mid.first, mid.second + eb.second}, c * cm);
    }
  }
  return out;
}

PhasePolynomial derivative(const PhasePolynomial& a, Axis axis, int order) {
  PhasePolynomial out = a;
  for (int k = 0; k < order; ++k) out = derivative_once(out, axis);
  return out;
}

std::pair<double, double> evaluate(const PhasePolynomial& a, double q, double p, double hbar) {
  double re = 0.0, im = 0.0;
  for (const auto& [e, c] : a.terms()) {
    const double m = std::pow(q, e.first) * std::pow(p, e.second);
    re += m * c.evaluate_real(hbar);
    im += m * c.evaluate_imag(hbar);
  }
  return {re, im};
}

OperatorPolynomial normal_form(const std::vector<WordFactor>& word) {
  OperatorPolynomial out(1);
  for (const auto& f : word) {
    if (f.power < 0) throw std::invalid_argument("negative power in operator word");
    out = out * (f.axis == Axis::q ? q_hat(f.power) : p_hat(f.power));
  }
  return out;
}

OperatorPolynomial q_hat(int power) { return OperatorPolynomial::monomial(power, 0); }
OperatorPolynomial p_hat(int power) { return OperatorPolynomial::monomial(0, power); }
PhasePolynomial q_sym(int power) { return PhasePolynomial::monomial(power, 0); }
PhasePolynomial p_sym(int power) { return PhasePolynomial::monomial(0, power); }
HbarCoefficient i_hbar(std::size_t power) { return HbarCoefficient::monomial(ComplexRational::i(), power); }

OperatorPolynomial adjoint(const OperatorPolynomial& a) {
  OperatorPolynomial out;
  for (const auto& [e, c] : a.terms()) out += normal_form({{Axis::p, e.second}, {Axis::q, e.first}}) * c.conj();
  return out;
}

PhasePolynomial poisson_bracket(const PhasePolynomial& a, const PhasePolynomial& b) {
  return derivative(a, Axis::q) * derivative(b, Axis::p) - derivative(a, Axis::p) * derivative(b, Axis::q);
}

PhasePolynomial bidifferential_power(const PhasePolynomial& a, const PhasePolynomial& b, int n) {
  // (∂q^L∂p^R − ∂p^L∂q^R)^n = Σ_j C(n,j)(−1)^j ∂q^{n−j}∂p^j (L) · ∂p^{n−j}∂q^j (R)
  PhasePolynomial out;
  for (int j = 0; j <= n; ++j) {
    PhasePolynomial left = derivative(derivative(a, Axis::q, n - j), Axis::p, j);
    if (left.is_zero()) continue;
    PhasePolynomial right = derivative(derivative(b, Axis::p, n - j), Axis::q, j);
    if (right.is_zero()) continue;
    Rational w = binomial(n, j);
    if (j % 2 == 1) w = -w;
    out += (left * right) * HbarCoefficient(ComplexRational(w));
  }
  return out;
}

PhasePolynomial star_product(const PhasePolynomial& a, const PhasePolynomial& b) {
  PhasePolynomial out;
  const int max_n = std::min(a.total_degree(), b.total_degree());
  HbarCoefficient weight = 1;  // (iħ/2)^n / n!
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) weight *= HbarCoefficient::monomial(ComplexRational(0, Rational(1, 2 * n)), 1);
    out += bidifferential_power(a, b, n) * weight;
  }
  return out;
}

PhasePolynomial moyal_bracket(const PhasePolynomial& a, const PhasePolynomial& b) {
  PhasePolynomial diff = star_product(a, b) - star_product(b, a);
  return divide_by_hbar(diff) * HbarCoefficient(ComplexRational(0, -1));
}

OperatorPolynomial weyl_quantize(const PhasePolynomial& a) {
  OperatorPolynomial out;
  for (const auto& [e, c] : a.terms()) {
    auto [r, s] = e;
    OperatorPolynomial sym;
    for (int k = 0; k <= r; ++k)
      sym += normal_form({{Axis::q, k}, {Axis::p, s}, {Axis::q, r - k}}) * HbarCoefficient(ComplexRational(binomial(r, k)));
    Rational scale(1);
    scale /= Rational(mpz_class(1) << r);
    out += sym * (c * ComplexRational(scale));
  }
  return out;
}

PhasePolynomial weyl_symbol(const OperatorPolynomial& a) {
  PhasePolynomial out;
  OperatorPolynomial rest = a;
  while (!rest.is_zero()) {
    // Quantized monomials are the word itself plus strictly lower total degree.
    auto lead = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (it->first.first + it->first.second >= lead->first.first + lead->first.second) lead = it;
    const auto [r, s] = lead->first;
    const HbarCoefficient c = lead->second;
    out.add_term({r, s}, c);
    rest -= weyl_quantize(PhasePolynomial::monomial(r, s)) * c;
  }
  return out;
}

OperatorPolynomial odot_product(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  return weyl_quantize(weyl_symbol(a) * weyl_symbol(b));
}

OperatorPolynomial commutator(const OperatorPolynomial& a, const OperatorPolynomial& b) { return a * b - b * a; }

OperatorPolynomial subscript_derivative(const OperatorPolynomial& a, Axis axis) {
  OperatorPolynomial c = axis == Axis::q ? commutator(a, p_hat()) : commutator(q_hat(), a);
  return divide_by_hbar(c) * HbarCoefficient(ComplexRational(0, -1));
}

OperatorPolynomial subscript_derivative(const OperatorPolynomial& a, int q_order, int p_order) {
  OperatorPolynomial out = a;
  for (int k = 0; k < q_order && !out.is_zero(); ++k) out = subscript_derivative(out, Axis::q);
  for (int k = 0; k < p_order && !out.is_zero(); ++k) out = subscript_derivative(out, Axis::p);
  return out;
}

OperatorPolynomial odot_bracket(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  OperatorPolynomial inner = odot_product(subscript_derivative(a, Axis::q), subscript_derivative(b, Axis::p)) -
                             odot_product(subscript_derivative(a, Axis::p), subscript_derivative(b, Axis::q));
  return inner * i_hbar();
}

Rational theta_over_sine_coefficient(int k) {
  switch (k) {
    case 0: return Rational(1);
    case 1: return Rational(1, 6);
    case 2: return Rational(7, 360);
    default: throw std::out_of_range("theta/sin(theta) coefficient table covers orders 0..2");
  }
}

OperatorPolynomial odot_bracket_series_term(const OperatorPolynomial& a, const OperatorPolynomial& b, int k) {
  if (k < 0 || k > kMaxSeriesOrder) throw std::out_of_range("odot bracket series order must be 0, 1 or 2");
  const int n = 2 * k;
  OperatorPolynomial sum;
  for (int j = 0; j <= n; ++j) {
    OperatorPolynomial da = subscript_derivative(a, n - j, j);
    if (da.is_zero()) continue;
    OperatorPolynomial db = subscript_derivative(b, j, n - j);
    if (db.is_zero()) continue;
    Rational w = binomial(n, j);
    if (j % 2 == 1) w = -w;
    sum += commutator(da, db) * HbarCoefficient(ComplexRational(w));
  }
  // c_k (ħ/2)^{2k}
  Rational scale = theta_over_sine_coefficient(k);
  scale /= Rational(mpz_class(1) << n);
  return sum * HbarCoefficient::monomial(ComplexRational(scale), static_cast<std::size_t>(n));
}

OperatorPolynomial odot_bracket_series_sum(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  // Term k needs both operands of total degree ≥ 2k+1.
  const int min_degree = std::min(weyl_symbol(a).total_degree(), weyl_symbol(b).total_degree());
  if (min_degree >= 2 * (kMaxSeriesOrder + 1) + 1)
    throw std::domain_error("odot bracket series does not terminate within the coefficient table");
  OperatorPolynomial out;
  for (int k = 0; k <= kMaxSeriesOrder; ++k) out += odot_bracket_series_term(a, b, k);
  return out;
}

}  // namespace weylmech::symbolic
