#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <Eigen/Eigenvalues>

#include "weylmech/errors.hpp"
#include "weylmech/evolution/evolution.hpp"
#include "weylmech/json_text.hpp"
#include "weylmech/numeric/weyl_transform.hpp"

#include "batched_fft.hpp"

namespace weylmech::evolution {

using numeric::Complex;
using numeric::Role;

namespace {

constexpr Complex kI(0.0, 1.0);

double spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

// Entry (j, l) times (i·m·dx/ħ)^order, m the wrapped separation l − j.
void scale_by_separation(ComplexMatrix& x, const GridSpec& g, int order) {
  const std::size_t n = g.n;
  const double unit = g.dx() / g.hbar;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < n; ++j) {
      const double s = static_cast<double>(numeric::wrapped_separation(j, l, n)) * unit;
      x(j, l) *= std::pow(kI * s, order);
    }
}

}  // namespace

void EvolutionConfig::validate() const {
  if (!(dt > 0) || !std::isfinite(dt)) throw PreconditionError("dt must be positive");
  if (!(t_final >= 0) || !std::isfinite(t_final)) throw PreconditionError("t_final must be non-negative");
  if (truncation_order < 0 || truncation_order > 2) throw PreconditionError("truncation_order must be 0, 1 or 2");
  if (snapshot_stride < 1) throw PreconditionError("snapshot_stride must be positive");
  (void)steps();
}

std::size_t EvolutionConfig::steps() const {
  const double ratio = t_final / dt;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
    throw PreconditionError("dt must divide t_final");
  return static_cast<std::size_t>(rounded);
}

OperatorMatrix momentum_derivative(const OperatorMatrix& a, int order) {
  if (order != 1 && order != 2 && order != 4) throw PreconditionError("momentum_derivative supports orders 1, 2 and 4");
  OperatorMatrix out = a;
  scale_by_separation(out.entries, a.grid, order);
  out.role = Role::generic;
  return out;
}

struct Hamiltonian::FftPlans : detail::BatchedFft {
  using BatchedFft::BatchedFft;
};

Hamiltonian::Hamiltonian(const GridSpec& g, PotentialSpec pot) : grid_(g), pot_(std::move(pot)) {
  grid_.validate();
  pot_.validate();
  const double m = pot_.mass;
  kinetic_ = numeric::inverse_weyl(PhaseField::sample(g, [m](double, double p) { return Complex(p * p / (2 * m)); })).entries;
  momentum_ = numeric::inverse_weyl(PhaseField::sample(g, [](double, double p) { return Complex(p); })).entries;
  const std::size_t n = g.n;
  kinetic_eigen_.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    const double p = (r < n / 2 ? static_cast<double>(r) : static_cast<double>(r) - static_cast<double>(n)) * g.dp();
    kinetic_eigen_[r] = p * p / (2 * m);
  }
  for (std::size_t i = 0; i < n; ++i) {
    v0_.push_back(pot_.derivative(g.x(i), 0));
    v2_.push_back(pot_.derivative(g.x(i), 2));
    v4_.push_back(pot_.derivative(g.x(i), 4));
  }
  plans_ = std::make_shared<const FftPlans>(static_cast<int>(n));

  const double hbar = g.hbar;
  for (auto& w : weight_) w.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < n; ++j) {
      const double s = static_cast<double>(numeric::wrapped_separation(j, l, n)) * g.dx() / hbar;
      const auto jj = static_cast<Eigen::Index>(j), ll = static_cast<Eigen::Index>(l);
      weight_[0](jj, ll) = -(v0_[j] - v0_[l]) / hbar;
      weight_[1](jj, ll) = weight_[0](jj, ll) + hbar / 24 * (v2_[j] - v2_[l]) * s * s;
      weight_[2](jj, ll) = weight_[1](jj, ll) - 7 * hbar * hbar * hbar / 5760 * (v4_[j] - v4_[l]) * s * s * s * s;
    }
}

const std::vector<double>& Hamiltonian::v(int order) const {
  switch (order) {
    case 0: return v0_;
    case 2: return v2_;
    case 4: return v4_;
    default: throw std::out_of_range("potential derivative order must be 0, 2 or 4");
  }
}

const Eigen::MatrixXd& Hamiltonian::potential_weight(int truncation_order) const {
  if (truncation_order < 0 || truncation_order > 2) throw PreconditionError("truncation_order must be 0, 1 or 2");
  return weight_[static_cast<std::size_t>(truncation_order)];
}

ComplexMatrix Hamiltonian::kinetic_left(const ComplexMatrix& x) const {
  const auto n = static_cast<Eigen::Index>(grid_.n);
  if (x.rows() != n || x.cols() != n) throw GridError("matrix does not match the grid");
  ComplexMatrix spec(n, n), out(n, n);
  plans_->forward(x, spec);
  const Eigen::Map<const Eigen::VectorXd> lambda(kinetic_eigen_.data(), n);
  spec.array().colwise() *= (lambda / static_cast<double>(n)).cast<Complex>().array();
  plans_->backward(spec, out);
  return out;
}

// X·K = (K·X†)† since K is Hermitian
ComplexMatrix Hamiltonian::kinetic_right(const ComplexMatrix& x) const {
  const ComplexMatrix xa = x.adjoint();
  return kinetic_left(xa).adjoint();
}

double Hamiltonian::spectral_radius(int truncation_order) const {
  const double hbar = grid_.hbar;
  const double smax = static_cast<double>(grid_.n / 2) * grid_.dx() / hbar;
  double r = (spread(kinetic_eigen_) + spread(v0_)) / hbar;
  if (truncation_order >= 1) r += hbar / 24 * spread(v2_) * smax * smax;
  if (truncation_order >= 2) r += 7 * std::pow(hbar, 3) / 5760 * spread(v4_) * std::pow(smax, 4);
  return r;
}

namespace {

// Same map for Hermitian ρ, using (Kρ)† = ρK.
ComplexMatrix rhs_hermitian(const ComplexMatrix& rho, const Hamiltonian& h, int truncation_order) {
  const ComplexMatrix a = h.kinetic_left(rho);
  ComplexMatrix out = (a - a.adjoint()) * (-kI / h.grid().hbar);
  out.array() += kI * h.potential_weight(truncation_order).array().cast<Complex>() * rho.array();
  return out;
}

ComplexMatrix rhs(const ComplexMatrix& rho, const Hamiltonian& h, int truncation_order) {
  ComplexMatrix out = (h.kinetic_left(rho) - h.kinetic_right(rho)) * (-kI / h.grid().hbar);
  out.array() += kI * h.potential_weight(truncation_order).array().cast<Complex>() * rho.array();
  return out;
}

// Frobenius weight of entries with |m| ≥ 3n/8 relative to the whole matrix.
double far_separation_fraction(const OperatorMatrix& rho) {
  const std::size_t n = rho.grid.n;
  double far = 0, all = 0;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < n; ++j) {
      const double w = std::norm(rho.entries(j, l));
      all += w;
      if (8 * std::abs(numeric::wrapped_separation(j, l, n)) >= 3 * static_cast<long>(n)) far += w;
    }
  return all > 0 ? std::sqrt(far / all) : 0.0;
}

}  // namespace

OperatorMatrix semiquantum_rhs(const OperatorMatrix& rho, const Hamiltonian& h, int truncation_order) {
  if (truncation_order < 0 || truncation_order > 2) throw PreconditionError("truncation_order must be 0, 1 or 2");
  numeric::require_same_grid(rho.grid, h.grid());
  return {rho.grid, rhs(rho.entries, h, truncation_order), Role::generic};
}

OperatorMatrix semiquantum_rhs(const OperatorMatrix& rho, const PotentialSpec& pot, int truncation_order) {
  return semiquantum_rhs(rho, Hamiltonian(rho.grid, pot), truncation_order);
}

Monitors measure(const OperatorMatrix& rho, const Hamiltonian& h, bool spectrum) {
  const auto& g = h.grid();
  const auto& e = rho.entries;
  Monitors m;
  m.trace = e.trace().real();
  for (std::size_t j = 0; j < g.n; ++j) {
    const double d = e(j, j).real(), x = g.x(j);
    m.q += x * d;
    m.q2 += x * x * d;
    m.energy += h.v(0)[j] * d;
  }
  // Tr(AB) = Σ A ∘ Bᵀ
  m.p = h.momentum().cwiseProduct(e.transpose()).sum().real();
  const double kin = h.kinetic().cwiseProduct(e.transpose()).sum().real();
  m.p2 = 2 * h.potential().mass * kin;
  m.energy += kin;
  m.purity = e.cwiseProduct(e.transpose()).sum().real();
  m.hermiticity_residual = rho.hermiticity_residual();
  if (spectrum) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.hermitian_part().entries, Eigen::EigenvaluesOnly);
    m.min_eigenvalue = solver.eigenvalues()(0);
  } else {
    m.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  }
  return m;
}

TrajectoryRecord integrate(const quasidensity::QuasidensityOperator& rho0, const PotentialSpec& pot,
                           const EvolutionConfig& cfg) {
  cfg.validate();
  const Hamiltonian h(rho0.matrix.grid, pot);
  const double radius = h.spectral_radius(cfg.truncation_order);
  if (cfg.dt * radius >= kStabilityLimit)
    throw PreconditionError("dt·(spectral radius) = " + json_number(cfg.dt * radius) + " is not below " +
                            json_number(kStabilityLimit) + "; reduce dt below " + json_number(kStabilityLimit / radius));
  numeric::require_finite(rho0.matrix.entries, "initial state");
  const double scale = rho0.matrix.entries.cwiseAbs().maxCoeff();
  if (rho0.matrix.hermiticity_residual() > 1e-6 * scale) throw PreconditionError("initial state is not Hermitian");
  if (const double f = far_separation_fraction(rho0.matrix); f > 1e-3)
    throw PreconditionError("initial state is not localized in x − y (weight " + json_number(f) +
                            " beyond 3/8 of the box); the grid cannot propagate it");

  const std::size_t steps = cfg.steps();
  const auto stride = static_cast<std::size_t>(cfg.snapshot_stride);
  TrajectoryRecord rec;
  OperatorMatrix rho = rho0.matrix;

  auto record = [&](double t, double residual, bool snap) {
    Monitors m = measure(rho, h, snap);
    m.hermiticity_residual = residual;
    rec.times.push_back(t);
    rec.monitors.push_back(m);
    if (snap) {
      rec.snapshot_times.push_back(t);
      rec.snapshots.push_back(rho);
    }
    for (double v : {m.trace, m.q, m.p, m.q2, m.p2, m.energy, m.purity})
      if (!std::isfinite(v) || std::abs(v) > 1e6) {
        rec.abort_reason = "monitor blew up at t = " + json_number(t);
        return false;
      }
    return true;
  };

  const double r0 = rho.hermiticity_residual();
  rho = rho.hermitian_part();
  if (!record(0.0, r0, true)) return rec;

  const double dt = cfg.dt;
  for (std::size_t s = 1; s <= steps; ++s) {
    const ComplexMatrix& y = rho.entries;
    const ComplexMatrix k1 = rhs_hermitian(y, h, cfg.truncation_order);
    const ComplexMatrix k2 = rhs_hermitian(y + (dt / 2) * k1, h, cfg.truncation_order);
    const ComplexMatrix k3 = rhs_hermitian(y + (dt / 2) * k2, h, cfg.truncation_order);
    const ComplexMatrix k4 = rhs_hermitian(y + dt * k3, h, cfg.truncation_order);
    rho.entries = y + (dt / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double residual = rho.hermiticity_residual();
    rho = rho.hermitian_part();
    if (!record(static_cast<double>(s) * dt, residual, s % stride == 0 || s == steps)) break;
  }
  return rec;
}

void write_csv(std::ostream& out, const TrajectoryRecord& r) {
  out << "t,trace,hermiticity_residual,q,p,q2,p2,energy,purity,min_eigenvalue\n";
  for (std::size_t i = 0; i < r.times.size(); ++i) {
    const auto& m = r.monitors[i];
    out << json_number(r.times[i]);
    for (double v : {m.trace, m.hermiticity_residual, m.q, m.p, m.q2, m.p2, m.energy, m.purity})
      out << ',' << json_number(v);
    out << ',' << (std::isnan(m.min_eigenvalue) ? std::string() : json_number(m.min_eigenvalue)) << '\n';
  }
}

}  // namespace weylmech::evolution
