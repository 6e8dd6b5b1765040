#pragma once

#include <string>
#include <vector>

#include "weylmech/numeric/fields.hpp"

namespace weylmech::quasidensity {

using numeric::GridSpec;
using numeric::OperatorMatrix;
using numeric::PhaseField;

/// 2πħ·W⁻¹ of a classical density. Hermitian with unit trace, not necessarily positive.
struct QuasidensityOperator {
  OperatorMatrix matrix;
  std::string provenance;
};

/// Most negative eigenvalue below which a quasidensity counts as not positive.
inline constexpr double kNegativityThreshold = 1e-4;

/// Requires a real field tagged density whose integral is 1 within 1e−6 relative.
QuasidensityOperator groenewold_from_density(const PhaseField& rho_c, std::string provenance = "sampled density");

/// (√(αβ)/π)·exp(−αq² − βp²) sampled on the grid, tagged density.
PhaseField gaussian_class_density(double alpha, double beta, const GridSpec& g);

/// One term w·(√(αβ)/π)·exp(−α(q − q0)² − β(p − p0)²) of a Gaussian mixture.
struct GaussianComponent {
  double weight = 1.0, alpha = 1.0, beta = 1.0, q0 = 0.0, p0 = 0.0;
};

/// Sum of the components sampled on the grid, tagged density. Weights must be
/// positive and sum to 1 within 1e−12.
PhaseField gaussian_mixture_density(const std::vector<GaussianComponent>& components, const GridSpec& g);

/// Closed-form kernel √(α/π)·exp(−α((x+y)/2)² − (x−y)²/(4βħ²)) on the grid. The
/// separation is the wrapped one, and the centre wraps with it, matching the
/// transform's periodic convention; pairs exactly half a box apart use their plain
/// midpoint.
QuasidensityOperator gaussian_quasidensity(double alpha, double beta, const GridSpec& g);

/// Throws PreconditionError unless the grid has at least `min_samples` nodes per
/// standard deviation of the position marginal and of the separation profile, and
/// the half-box spans at least `min_extent` of each.
void require_resolved_gaussian(double alpha, double beta, const GridSpec& g, double min_samples = 4.0,
                               double min_extent = 5.0);

/// Diagnostic point density δ(q)δ(p): 1/(dx·dp) at the node (0, 0). The grid must have
/// a node at q = 0. Its Groenewold image puts 1/dx on the antidiagonal pairs with even
/// separation and spreads the remaining unit weight per row over the half-lattice
/// neighbours through the interpolation stencil, so each interior row integrates to 2
/// as 2δ(x + y) does.
PhaseField point_density(const GridSpec& g);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // descending
  double trace = 0.0;
  double purity = 0.0;
  double min_eigenvalue = 0.0;
  double negativity_mass = 0.0;
  double largest_singular_value = 0.0;
  double hermiticity_residual = 0.0;  // max |ρ − ρ†|, before symmetrization
};

/// Dense eigendecomposition of the Hermitian part. Throws PreconditionError when the
/// anti-Hermitian residual exceeds 1e−6 of the largest entry.
SpectrumReport spectrum_diagnostics(const QuasidensityOperator& rho);
SpectrumReport spectrum_diagnostics(const OperatorMatrix& rho);

/// Flat JSON object with keys trace, purity, min_eigenvalue, negativity_mass,
/// largest_singular_value, hermiticity_residual, eigenvalues.
std::string to_json(const SpectrumReport& r);

}  // namespace weylmech::quasidensity
