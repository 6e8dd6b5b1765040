#pragma once

#include <array>
#include <functional>

#include "weylmech/numeric/fields.hpp"
#include "weylmech/symbolic/polynomial.hpp"

namespace weylmech::numeric {

/// Forward Weyl-Wigner transform A(q, p) = ∫ A_K(q − s/2, q + s/2) e^{ips/ħ} ds.
///
/// Separations s = m·dx, m ∈ [−n/2, n/2), are taken with periodic wraparound. Even m
/// pairs are centred on grid nodes; odd m pairs are centred on the half-integer points
/// of the doubled lattice and are carried to the nodes along the centre direction
/// with a 12-point Lagrange stencil. Stencil windows are clipped (not wrapped) at the
/// grid edges, so polynomial symbols stay exact up to the boundary. The s-integral is
/// an FFT onto the momentum lattice.
PhaseField weyl_transform(const OperatorMatrix& op);

/// Inverse map A_K(x, y) = (1/2πħ) ∫ A((x + y)/2, p) e^{ip(x−y)/ħ} dp, computed by an
/// inverse FFT over p followed by the inverse shear. Real fields give Hermitian matrices.
OperatorMatrix inverse_weyl(const PhaseField& field);

/// Wigner function weyl_transform(rho)/(2πħ).
PhaseField wigner_of(const OperatorMatrix& rho);

struct TraceValue {
  double value = 0.0;
  double imaginary_residual = 0.0;
};

/// Re Tr(obs·rho), with |Im Tr(obs·rho)| reported.
TraceValue trace_expectation(const OperatorMatrix& obs, const OperatorMatrix& rho);

/// Σ obs·density·dx·dp (real part). The density must carry Role::density.
double phase_expectation(const PhaseField& obs, const PhaseField& density);

/// inverse_weyl(weyl_transform(a) · weyl_transform(b)), pointwise product of symbols.
OperatorMatrix odot_numeric(const OperatorMatrix& a, const OperatorMatrix& b);

/// Kernel of A ⊙ B at (x, y) by direct quadrature of the four-point integral
///   ∫ A_K([3x+y−2u]/4, [x+3y+2u]/4) B_K([3x+y+2u]/4, [x+3y−2u]/4) du
/// with the composite trapezoid rule on [−u_max, u_max]. Cross-check only.
Complex odot_kernel_quadrature(const std::function<Complex(double, double)>& kernel_a,
                               const std::function<Complex(double, double)>& kernel_b, double x, double y,
                               double u_max, std::size_t intervals);

/// Field of a phase polynomial evaluated with the grid's hbar.
PhaseField sample_polynomial(const GridSpec& g, const symbolic::PhasePolynomial& a, Role r = Role::generic);

/// Operator matrix of a polynomial operator: inverse_weyl of its sampled Weyl symbol.
OperatorMatrix operator_matrix(const GridSpec& g, const symbolic::OperatorPolynomial& a, Role r = Role::generic);

/// Number of nodes in the half-sample interpolation stencil.
inline constexpr int kHalfSampleStencil = 12;

/// Lagrange weights for nodes 0..11 evaluated at the half-integer position
/// `half_steps + 1/2`, half_steps ∈ [−1, 11]. Position 5.5 is the centred interior
/// stencil; the others serve windows clipped at the grid edges, including the half
/// step past either end needed by the outermost nodes. Exact for
/// polynomials of degree ≤ 11.
const std::array<double, kHalfSampleStencil>& half_sample_weights(int half_steps);

/// Separation index m ∈ [−n/2, n/2) with j + m ≡ l (mod n).
inline long wrapped_separation(std::size_t j, std::size_t l, std::size_t n) {
  long m = static_cast<long>(l) - static_cast<long>(j);
  const long half = static_cast<long>(n / 2);
  if (m >= half) m -= static_cast<long>(n);
  if (m < -half) m += static_cast<long>(n);
  return m;
}

}  // namespace weylmech::numeric
