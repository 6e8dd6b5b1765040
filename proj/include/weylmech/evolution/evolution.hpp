#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "weylmech/evolution/potential.hpp"
#include "weylmech/numeric/fields.hpp"
#include "weylmech/quasidensity/quasidensity.hpp"

namespace weylmech::evolution {

using numeric::Complex;
using numeric::ComplexMatrix;
using numeric::GridSpec;
using numeric::OperatorMatrix;
using numeric::PhaseField;

/// Largest |z| on the imaginary axis for which classic RK4 is stable is 2√2; the
/// guard keeps dt·(spectral radius estimate) below this.
inline constexpr double kStabilityLimit = 2.8;

struct EvolutionConfig {
  double dt = 1e-3;
  double t_final = 1.0;
  int truncation_order = 2;  // correction commutators beyond the leading one
  int snapshot_stride = 100;

  /// Throws PreconditionError on non-positive dt or stride, negative t_final, or a
  /// truncation order outside {0, 1, 2}.
  void validate() const;
  /// Number of steps, dt dividing t_final up to 1e−9 relative.
  [[nodiscard]] std::size_t steps() const;
};

/// X ↦ (1/iħ)[q̂, X] applied `order` times, order ∈ {1, 2, 4}. Entry (j, l) is scaled by
/// (i·m·dx/ħ)^order with m the wrapped separation, which is the p-derivative of the
/// symbol on the periodic grid.
OperatorMatrix momentum_derivative(const OperatorMatrix& a, int order);

/// Operators that stay fixed during a propagation.
class Hamiltonian {
 public:
  Hamiltonian(const GridSpec& g, PotentialSpec pot);

  [[nodiscard]] const GridSpec& grid() const { return grid_; }
  [[nodiscard]] const PotentialSpec& potential() const { return pot_; }
  /// p²/(2m) as a matrix (inverse transform of its symbol).
  [[nodiscard]] const ComplexMatrix& kinetic() const { return kinetic_; }
  /// Momentum matrix, inverse transform of p.
  [[nodiscard]] const ComplexMatrix& momentum() const { return momentum_; }
  /// V, V'', V'''' at the nodes.
  [[nodiscard]] const std::vector<double>& v(int order) const;

  /// K·X and X·K through the FFT diagonalisation of the circulant kinetic matrix.
  [[nodiscard]] ComplexMatrix kinetic_left(const ComplexMatrix& x) const;
  [[nodiscard]] ComplexMatrix kinetic_right(const ComplexMatrix& x) const;

  /// Real W with the potential part of the right-hand side equal to i·W ∘ ρ:
  /// −ΔV/ħ + (ħ/24)·ΔV″·s² − (7ħ³/5760)·ΔV⁗·s⁴, s = m·dx/ħ, Δf = f(x_j) − f(x_l).
  [[nodiscard]] const Eigen::MatrixXd& potential_weight(int truncation_order) const;

  /// Upper bound on the spectral radius of the linear map ρ ↦ semiquantum_rhs(ρ).
  [[nodiscard]] double spectral_radius(int truncation_order) const;

 private:
  GridSpec grid_;
  PotentialSpec pot_;
  ComplexMatrix kinetic_, momentum_;
  std::vector<double> kinetic_eigen_;  // FFT order
  std::vector<double> v0_, v2_, v4_;
  std::array<Eigen::MatrixXd, 3> weight_;
  struct FftPlans;
  std::shared_ptr<const FftPlans> plans_;
};

/// (1/iħ)[H, ρ] − (iħ/24)[V''(q̂), ρ_pp] − (7iħ³/5760)[V''''(q̂), ρ_pppp], keeping the
/// first 1 + truncation_order terms. Correction terms of a potential of degree ≤ 2 are
/// exactly zero.
OperatorMatrix semiquantum_rhs(const OperatorMatrix& rho, const Hamiltonian& h, int truncation_order);
OperatorMatrix semiquantum_rhs(const OperatorMatrix& rho, const PotentialSpec& pot, int truncation_order);

struct Monitors {
  double trace = 0, hermiticity_residual = 0, q = 0, p = 0, q2 = 0, p2 = 0, energy = 0, purity = 0;
  double min_eigenvalue = 0;  // NaN away from snapshot strides
};

struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<Monitors> monitors;
  std::vector<double> snapshot_times;
  std::vector<OperatorMatrix> snapshots;
  std::string abort_reason;  // empty unless a monitor blew up

  [[nodiscard]] bool aborted() const { return !abort_reason.empty(); }
};

/// Header: t,trace,hermiticity_residual,q,p,q2,p2,energy,purity,min_eigenvalue.
void write_csv(std::ostream& out, const TrajectoryRecord& r);

/// Expectation monitors of a state; min_eigenvalue only when `spectrum` is set.
Monitors measure(const OperatorMatrix& rho, const Hamiltonian& h, bool spectrum);

/// Classic RK4 on semiquantum_rhs with (ρ + ρ†)/2 after every step. The residual is
/// recorded before symmetrizing; at t = 0 it is the residual of the input. Snapshots and
/// eigenvalue monitors are taken every snapshot_stride steps and at the end. Throws
/// PreconditionError when the stability guard fails or the state is not localized in
/// x − y; stops early with abort_reason set if any monitor exceeds 1e6.
TrajectoryRecord integrate(const quasidensity::QuasidensityOperator& rho0, const PotentialSpec& pot,
                           const EvolutionConfig& cfg);

struct LiouvilleTrajectory {
  std::vector<double> times;
  std::vector<PhaseField> fields;
};

/// Strang splitting for ∂ρ/∂t = {H, ρ}: half kinetic shear q ← q − p·dt/(2m), full
/// force shear p ← p + V'(q)·dt, half kinetic shear, each by Fourier interpolation.
/// Fields are returned at every snapshot_stride steps and at the end.
LiouvilleTrajectory liouville_reference(const PhaseField& rho0, const PotentialSpec& pot, const EvolutionConfig& cfg);

struct ErrorReport {
  std::vector<double> times, field_distance, dq, dp, dq2, dH;
};

/// Runs both solvers from the same classical density and compares at the snapshot
/// times: max |wigner_of(ρ̂) − ρ_classical| and absolute differences of ⟨q⟩, ⟨p⟩, ⟨q²⟩, ⟨H⟩.
ErrorReport compare_evolutions(const PhaseField& rho0, const PotentialSpec& pot, const EvolutionConfig& cfg);

/// Object of arrays: times, field_distance, dq, dp, dq2, dH.
std::string to_json(const ErrorReport& r);

}  // namespace weylmech::evolution
