#pragma once

#include <vector>

#include "weylmech/symbolic/polynomial.hpp"

namespace weylmech::symbolic {

/// One factor of a word in the Weyl algebra: q̂^power or p̂^power.
struct WordFactor {
  Axis axis;
  int power;
};

/// Reduces an arbitrary product of q̂/p̂ powers to normal form q̂^r p̂^s.
OperatorPolynomial normal_form(const std::vector<WordFactor>& word);

/// Common operators.
OperatorPolynomial q_hat(int power = 1);
OperatorPolynomial p_hat(int power = 1);
PhasePolynomial q_sym(int power = 1);
PhasePolynomial p_sym(int power = 1);
/// i·ħ^power as a coefficient.
HbarCoefficient i_hbar(std::size_t power = 1);

/// Formal adjoint: conjugates coefficients and reverses words (q̂, p̂ self-adjoint, ħ real).
OperatorPolynomial adjoint(const OperatorPolynomial& a);

PhasePolynomial poisson_bracket(const PhasePolynomial& a, const PhasePolynomial& b);

/// A ⋆ B as the terminating series Σ_n (iħ/2)^n/n! · A J^n B.
PhasePolynomial star_product(const PhasePolynomial& a, const PhasePolynomial& b);

/// (A⋆B − B⋆A)/(iħ).
PhasePolynomial moyal_bracket(const PhasePolynomial& a, const PhasePolynomial& b);

/// A J^n B with J = ∂q^L ∂p^R − ∂p^L ∂q^R.
PhasePolynomial bidifferential_power(const PhasePolynomial& a, const PhasePolynomial& b, int n);

/// Weyl-ordered image of a phase polynomial; q^r p^s maps to 2^{-r} Σ_k C(r,k) q̂^k p̂^s q̂^{r-k}.
OperatorPolynomial weyl_quantize(const PhasePolynomial& a);

/// Exact inverse of weyl_quantize, by triangular inversion on the normal-form basis.
PhasePolynomial weyl_symbol(const OperatorPolynomial& a);

/// W⁻¹(W(A)·W(B)); commutative and associative.
OperatorPolynomial odot_product(const OperatorPolynomial& a, const OperatorPolynomial& b);

OperatorPolynomial commutator(const OperatorPolynomial& a, const OperatorPolynomial& b);

/// Axis q: (1/iħ)[A, p̂]. Axis p: (1/iħ)[q̂, A].
OperatorPolynomial subscript_derivative(const OperatorPolynomial& a, Axis axis);

/// Applies subscript_derivative q_order times along q and p_order times along p.
OperatorPolynomial subscript_derivative(const OperatorPolynomial& a, int q_order, int p_order);

/// iħ(A_q ⊙ B_p − A_p ⊙ B_q).
OperatorPolynomial odot_bracket(const OperatorPolynomial& a, const OperatorPolynomial& b);

/// Largest k accepted by odot_bracket_series_term.
inline constexpr int kMaxSeriesOrder = 2;

/// Coefficient c_k in θ/sin θ = Σ c_k θ^{2k}: 1, 1/6, 7/360.
Rational theta_over_sine_coefficient(int k);

/// Term of order ħ^{2k} in the expansion of the odot bracket in commutators:
///   c_k (ħ/2)^{2k} Σ_j C(2k,j) (−1)^j [A_{q^{2k−j} p^j}, B_{p^{2k−j} q^j}].
/// Throws std::out_of_range for k outside [0, kMaxSeriesOrder].
OperatorPolynomial odot_bracket_series_term(const OperatorPolynomial& a, const OperatorPolynomial& b, int k);

/// Sum of all series terms; throws std::domain_error when the series would need
/// terms beyond kMaxSeriesOrder to terminate.
OperatorPolynomial odot_bracket_series_sum(const OperatorPolynomial& a, const OperatorPolynomial& b);

}  // namespace weylmech::symbolic
