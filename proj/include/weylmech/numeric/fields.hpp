#pragma once

#include <complex>
#include <functional>
#include <string_view>

#include <Eigen/Dense>

#include "weylmech/numeric/grid.hpp"

namespace weylmech::numeric {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

enum class Role : unsigned { generic = 0, observable = 1, density = 2, quasidensity = 3 };

std::string_view role_name(Role r);
Role role_from_name(std::string_view name);

/// Complex samples on the (q, p) grid; values(i, k) is the sample at (x_i, p_k).
struct PhaseField {
  GridSpec grid;
  ComplexMatrix values;
  Role role = Role::generic;

  PhaseField() = default;
  PhaseField(GridSpec g, ComplexMatrix v, Role r = Role::generic);

  /// Samples f(q, p) on every node.
  static PhaseField sample(const GridSpec& g, const std::function<Complex(double, double)>& f,
                           Role r = Role::generic);

  /// Σ values·dx·dp.
  [[nodiscard]] Complex integral() const;
  [[nodiscard]] double max_abs_imag() const;
};

/// Discretized kernel: entries(i, j) = A_K(x_i, x_j)·dx, so composition is matrix
/// multiplication and the trace is the diagonal sum.
struct OperatorMatrix {
  GridSpec grid;
  ComplexMatrix entries;
  Role role = Role::generic;

  OperatorMatrix() = default;
  OperatorMatrix(GridSpec g, ComplexMatrix e, Role r = Role::generic);

  static OperatorMatrix identity(const GridSpec& g);
  /// Diagonal matrix of x_i.
  static OperatorMatrix position(const GridSpec& g);
  /// Diagonal matrix of f(x_i).
  static OperatorMatrix function_of_position(const GridSpec& g, const std::function<double(double)>& f);
  /// Kernel sampled pointwise: entries = kernel(x_i, x_j)·dx.
  static OperatorMatrix from_kernel(const GridSpec& g, const std::function<Complex(double, double)>& kernel,
                                    Role r = Role::generic);
  /// Rank-one ψψ† with ψ sampled on the grid (continuum-normalized ψ gives unit trace).
  static OperatorMatrix projector(const GridSpec& g, const std::function<Complex(double)>& psi);

  [[nodiscard]] Complex trace() const { return entries.trace(); }
  /// Kernel value A_K(x_i, x_j) = entries(i, j)/dx.
  [[nodiscard]] Complex kernel(std::size_t i, std::size_t j) const { return entries(i, j) / grid.dx(); }
  /// max |A − A†| over entries.
  [[nodiscard]] double hermiticity_residual() const;
  /// (A + A†)/2, keeping grid and role.
  [[nodiscard]] OperatorMatrix hermitian_part() const;
};

/// Max-norm of kernel differences, max |A_K − B_K| (entries divided by dx).
double kernel_distance(const OperatorMatrix& a, const OperatorMatrix& b);

/// max |a − b| over samples.
double field_distance(const PhaseField& a, const PhaseField& b);

/// Throws NonFiniteError if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, std::string_view what);

}  // namespace weylmech::numeric
