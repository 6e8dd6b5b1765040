#include "weylmech/numeric/fields.hpp"

#include <cmath>
#include <string>

#include "weylmech/errors.hpp"

namespace weylmech::numeric {

std::string_view role_name(Role r) {
  switch (r) {
    case Role::generic: return "generic";
    case Role::observable: return "observable";
    case Role::density: return "density";
    case Role::quasidensity: return "quasidensity";
  }
  return "generic";
}

Role role_from_name(std::string_view name) {
  for (Role r : {Role::generic, Role::observable, Role::density, Role::quasidensity})
    if (role_name(r) == name) return r;
  throw std::invalid_argument("unknown role tag '" + std::string(name) + "'");
}

void require_finite(const ComplexMatrix& m, std::string_view what) {
  if (!m.allFinite()) throw NonFiniteError(std::string(what) + " contains non-finite entries");
}

PhaseField::PhaseField(GridSpec g, ComplexMatrix v, Role r) : grid(g), values(std::move(v)), role(r) {
  grid.validate();
  if (values.rows() != static_cast<Eigen::Index>(grid.n) || values.cols() != static_cast<Eigen::Index>(grid.n))
    throw GridError("phase field shape does not match grid");
}

PhaseField PhaseField::sample(const GridSpec& g, const std::function<Complex(double, double)>& f, Role r) {
  g.validate();
  ComplexMatrix v(g.n, g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t k = 0; k < g.n; ++k) v(i, k) = f(g.x(i), g.p(k));
  return {g, std::move(v), r};
}

Complex PhaseField::integral() const { return values.sum() * grid.cell(); }

double PhaseField::max_abs_imag() const { return values.imag().cwiseAbs().maxCoeff(); }

OperatorMatrix::OperatorMatrix(GridSpec g, ComplexMatrix e, Role r) : grid(g), entries(std::move(e)), role(r) {
  grid.validate();
  if (entries.rows() != static_cast<Eigen::Index>(grid.n) || entries.cols() != static_cast<Eigen::Index>(grid.n))
    throw GridError("operator matrix shape does not match grid");
}

OperatorMatrix OperatorMatrix::identity(const GridSpec& g) {
  g.validate();
  return {g, ComplexMatrix::Identity(g.n, g.n), Role::observable};
}

OperatorMatrix OperatorMatrix::position(const GridSpec& g) {
  return function_of_position(g, [](double x) { return x; });
}

OperatorMatrix OperatorMatrix::function_of_position(const GridSpec& g, const std::function<double(double)>& f) {
  g.validate();
  ComplexMatrix e = ComplexMatrix::Zero(g.n, g.n);
  for (std::size_t i = 0; i < g.n; ++i) e(i, i) = f(g.x(i));
  return {g, std::move(e), Role::observable};
}

OperatorMatrix OperatorMatrix::from_kernel(const GridSpec& g, const std::function<Complex(double, double)>& kernel,
                                           Role r) {
  g.validate();
  const double dx = g.dx();
  ComplexMatrix e(g.n, g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j) e(i, j) = kernel(g.x(i), g.x(j)) * dx;
  return {g, std::move(e), r};
}

OperatorMatrix OperatorMatrix::projector(const GridSpec& g, const std::function<Complex(double)>& psi) {
  g.validate();
  Eigen::VectorXcd v(g.n);
  for (std::size_t i = 0; i < g.n; ++i) v(i) = psi(g.x(i));
  return {g, (v * v.adjoint()) * g.dx(), Role::quasidensity};
}

double OperatorMatrix::hermiticity_residual() const { return (entries - entries.adjoint()).cwiseAbs().maxCoeff(); }

OperatorMatrix OperatorMatrix::hermitian_part() const {
  ComplexMatrix h = 0.5 * (entries + entries.adjoint());
  return {grid, std::move(h), role};
}

double kernel_distance(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_grid(a.grid, b.grid);
  return (a.entries - b.entries).cwiseAbs().maxCoeff() / a.grid.dx();
}

double field_distance(const PhaseField& a, const PhaseField& b) {
  require_same_grid(a.grid, b.grid);
  return (a.values - b.values).cwiseAbs().maxCoeff();
}

}  // namespace weylmech::numeric
