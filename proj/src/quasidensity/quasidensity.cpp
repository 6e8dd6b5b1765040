#include "weylmech/quasidensity/quasidensity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "weylmech/errors.hpp"
#include "weylmech/json_text.hpp"
#include "weylmech/numeric/weyl_transform.hpp"

namespace weylmech::quasidensity {

using numeric::Complex;
using numeric::ComplexMatrix;
using numeric::Role;
using std::numbers::pi;

QuasidensityOperator groenewold_from_density(const PhaseField& rho_c, std::string provenance) {
  if (rho_c.role != Role::density) throw PreconditionError("groenewold_from_density requires a field tagged density");
  numeric::require_finite(rho_c.values, "density");
  const double scale = rho_c.values.cwiseAbs().maxCoeff();
  if (rho_c.max_abs_imag() > 1e-12 * scale) throw PreconditionError("density is not real");
  const double mass = rho_c.integral().real();
  if (std::abs(mass - 1.0) > 1e-6) throw PreconditionError("density integrates to " + json_number(mass) + ", not 1");

  OperatorMatrix m = numeric::inverse_weyl(rho_c);
  m.entries *= 2.0 * pi * rho_c.grid.hbar;
  m.role = Role::quasidensity;
  return {std::move(m), std::move(provenance)};
}

PhaseField gaussian_class_density(double alpha, double beta, const GridSpec& g) {
  if (!(alpha > 0) || !(beta > 0)) throw PreconditionError("gaussian widths must be positive");
  const double norm = std::sqrt(alpha * beta) / pi;
  return PhaseField::sample(
      g, [&](double q, double p) { return Complex(norm * std::exp(-alpha * q * q - beta * p * p)); }, Role::density);
}

PhaseField gaussian_mixture_density(const std::vector<GaussianComponent>& components, const GridSpec& g) {
  if (components.empty()) throw PreconditionError("mixture has no components");
  double total = 0;
  for (const auto& c : components) {
    if (!(c.weight > 0) || !(c.alpha > 0) || !(c.beta > 0) || !std::isfinite(c.q0) || !std::isfinite(c.p0))
      throw PreconditionError("mixture components need positive weight and widths and finite centres");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw PreconditionError("mixture weights sum to " + json_number(total) + ", not 1");
  return PhaseField::sample(
      g,
      [&](double q, double p) {
        double v = 0;
        for (const auto& c : components)
          v += c.weight * std::sqrt(c.alpha * c.beta) / pi *
               std::exp(-c.alpha * (q - c.q0) * (q - c.q0) - c.beta * (p - c.p0) * (p - c.p0));
        return Complex(v);
      },
      Role::density);
}

void require_resolved_gaussian(double alpha, double beta, const GridSpec& g, double min_samples, double min_extent) {
  g.validate();
  if (!(alpha > 0) || !(beta > 0)) throw PreconditionError("gaussian widths must be positive");
  const double sigma_q = 1.0 / std::sqrt(2.0 * alpha);
  const double sigma_s = g.hbar * std::sqrt(2.0 * beta);
  const double dx = g.dx(), half = g.length() / 2;
  const double sigma = std::min(sigma_q, sigma_s);
  if (sigma / dx < min_samples)
    throw PreconditionError("grid spacing " + json_number(dx) + " leaves fewer than " + json_number(min_samples) +
                            " samples per standard deviation " + json_number(sigma));
  if (half < min_extent * std::max(sigma_q, sigma_s))
    throw PreconditionError("half-box " + json_number(half) + " is shorter than " + json_number(min_extent) +
                            " standard deviations");
}

QuasidensityOperator gaussian_quasidensity(double alpha, double beta, const GridSpec& g) {
  require_resolved_gaussian(alpha, beta, g);
  const std::size_t n = g.n;
  const double dx = g.dx(), length = g.length();
  const double amp = std::sqrt(alpha / pi), width = 4.0 * beta * g.hbar * g.hbar;
  ComplexMatrix e(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      const long m = numeric::wrapped_separation(j, l, n);
      const double s = static_cast<double>(m) * dx;
      double c = g.x(j) + s / 2;
      if (c >= g.x_max) c -= length;
      if (c < g.x_min) c += length;
      // the half-box pair has two wrapped centres; the plain midpoint keeps it Hermitian
      if (2 * m == -static_cast<long>(n)) c = (g.x(j) + g.x(l)) / 2;
      e(j, l) = amp * std::exp(-alpha * c * c - s * s / width) * dx;
    }
  return {OperatorMatrix(g, std::move(e), Role::quasidensity),
          "gaussian alpha=" + json_number(alpha) + " beta=" + json_number(beta)};
}

PhaseField point_density(const GridSpec& g) {
  g.validate();
  const double at = -g.x_min / g.dx();
  const auto i0 = static_cast<std::size_t>(std::llround(at));
  if (std::abs(at - static_cast<double>(i0)) > 1e-9 || i0 >= g.n)
    throw PreconditionError("grid has no node at q = 0");
  PhaseField f(g, ComplexMatrix::Zero(g.n, g.n), Role::density);
  f.values(i0, g.n / 2) = 1.0 / g.cell();
  return f;
}

SpectrumReport spectrum_diagnostics(const QuasidensityOperator& rho) { return spectrum_diagnostics(rho.matrix); }

SpectrumReport spectrum_diagnostics(const OperatorMatrix& rho) {
  numeric::require_finite(rho.entries, "quasidensity");
  SpectrumReport r;
  r.hermiticity_residual = rho.hermiticity_residual();
  if (r.hermiticity_residual > 1e-6 * rho.entries.cwiseAbs().maxCoeff())
    throw PreconditionError("matrix is not Hermitian: residual " + json_number(r.hermiticity_residual));

  const ComplexMatrix h = rho.hermitian_part().entries;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InstabilityError("eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::reverse(r.eigenvalues.begin(), r.eigenvalues.end());

  r.trace = h.trace().real();
  r.purity = h.cwiseAbs2().sum();
  r.min_eigenvalue = r.eigenvalues.back();
  for (double l : r.eigenvalues) {
    if (l < 0) r.negativity_mass -= l;
    r.largest_singular_value = std::max(r.largest_singular_value, std::abs(l));
  }
  return r;
}

std::string to_json(const SpectrumReport& r) {
  return "{\"trace\": " + json_number(r.trace) + ", \"purity\": " + json_number(r.purity) +
         ", \"min_eigenvalue\": " + json_number(r.min_eigenvalue) +
         ", \"negativity_mass\": " + json_number(r.negativity_mass) +
         ", \"largest_singular_value\": " + json_number(r.largest_singular_value) +
         ", \"hermiticity_residual\": " + json_number(r.hermiticity_residual) +
         ", \"eigenvalues\": " + json_array(r.eigenvalues) + "}";
}

}  // namespace weylmech::quasidensity
