#include "weylmech/numeric/weyl_transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "weylmech/errors.hpp"
#include "weylmech/symbolic/algebra.hpp"

namespace weylmech::numeric {

namespace {

std::size_t wrap(long i, std::size_t n) {
  const long ln = static_cast<long>(n);
  long r = i % ln;
  return static_cast<std::size_t>(r < 0 ? r + ln : r);
}

double parity(long m) { return (m % 2 == 0) ? 1.0 : -1.0; }

Eigen::FFT<double> make_fft() {
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  return fft;
}

// First node of the clipped window around a target; interior windows put the
// target between nodes 5 and 6.
long window_start(long interior_start, std::size_t n) {
  return std::clamp(interior_start, 0L, static_cast<long>(n) - kHalfSampleStencil);
}

// Value at integer centre i from samples at half-integer centres h + 1/2.
Complex to_node(const std::vector<Complex>& at_half, long i, std::size_t n) {
  const long start = window_start(i - 6, n);
  const auto& w = half_sample_weights(static_cast<int>(i - start - 1));
  Complex v;
  for (int r = 0; r < kHalfSampleStencil; ++r) v += w[static_cast<std::size_t>(r)] * at_half[static_cast<std::size_t>(start + r)];
  return v;
}

// Value at half-integer centre h + 1/2 from samples at integer centres.
Complex to_half(const std::vector<Complex>& at_node, long h, std::size_t n) {
  const long start = window_start(h - 5, n);
  const auto& w = half_sample_weights(static_cast<int>(h - start));
  Complex v;
  for (int r = 0; r < kHalfSampleStencil; ++r) v += w[static_cast<std::size_t>(r)] * at_node[static_cast<std::size_t>(start + r)];
  return v;
}

}  // namespace

const std::array<double, kHalfSampleStencil>& half_sample_weights(int half_steps) {
  static const auto table = [] {
    std::array<std::array<double, kHalfSampleStencil>, kHalfSampleStencil + 1> t{};
    for (int s = -1; s < kHalfSampleStencil; ++s) {
      const long double target = s + 0.5L;
      for (int a = 0; a < kHalfSampleStencil; ++a) {
        long double v = 1.0L;
        for (int b = 0; b < kHalfSampleStencil; ++b)
          if (b != a) v *= (target - b) / static_cast<long double>(a - b);
        t[static_cast<std::size_t>(s + 1)][static_cast<std::size_t>(a)] = static_cast<double>(v);
      }
    }
    return t;
  }();
  if (half_steps < -1 || half_steps >= kHalfSampleStencil) throw std::out_of_range("half-sample position outside stencil");
  return table[static_cast<std::size_t>(half_steps + 1)];
}

PhaseField weyl_transform(const OperatorMatrix& op) {
  op.grid.validate();
  require_finite(op.entries, "operator matrix");
  const auto& g = op.grid;
  const std::size_t n = g.n;
  const long half = static_cast<long>(n / 2);
  const double dx = g.dx();

  // shear(i, m mod n) = (−1)^m · A_K(x_i − m·dx/2, x_i + m·dx/2)
  ComplexMatrix shear(n, n);
  std::vector<Complex> line(n);
  for (long m = -half; m < half; ++m) {
    const auto col = static_cast<Eigen::Index>(wrap(m, n));
    const double sign = parity(m);
    if (m % 2 == 0) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = wrap(static_cast<long>(i) - m / 2, n);
        shear(static_cast<Eigen::Index>(i), col) = sign * op.entries(j, wrap(static_cast<long>(j) + m, n)) / dx;
      }
    } else {
      // line[h]: pair with left point j = h − (m−1)/2, centred at h + 1/2
      for (std::size_t h = 0; h < n; ++h) {
        const std::size_t j = wrap(static_cast<long>(h) - (m - 1) / 2, n);
        line[h] = op.entries(j, wrap(static_cast<long>(j) + m, n)) / dx;
      }
      for (std::size_t i = 0; i < n; ++i) shear(static_cast<Eigen::Index>(i), col) = sign * to_node(line, static_cast<long>(i), n);
    }
  }

  auto fft = make_fft();
  ComplexMatrix values(n, n);
  std::vector<Complex> in(n), out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < n; ++c) in[c] = shear(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c));
    fft.inv(out, in);
    for (std::size_t k = 0; k < n; ++k) values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = dx * out[k];
  }
  return {g, std::move(values), op.role == Role::observable ? Role::observable : Role::generic};
}

OperatorMatrix inverse_weyl(const PhaseField& field) {
  field.grid.validate();
  require_finite(field.values, "phase field");
  const auto& g = field.grid;
  const std::size_t n = g.n;
  const long half = static_cast<long>(n / 2);
  const double dx = g.dx();

  // profile(i, m mod n) = A_K at centre x_i and separation m·dx
  auto fft = make_fft();
  ComplexMatrix profile(n, n);
  std::vector<Complex> in(n), out(n);
  const double scale = 1.0 / (static_cast<double>(n) * dx);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) in[k] = field.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
    fft.fwd(out, in);
    for (long m = -half; m < half; ++m) {
      const std::size_t c = wrap(m, n);
      profile(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = parity(m) * scale * out[c];
    }
  }

  ComplexMatrix entries(n, n);
  std::vector<Complex> line(n);
  for (long m = -half; m < half; ++m) {
    const auto col = static_cast<Eigen::Index>(wrap(m, n));
    for (std::size_t i = 0; i < n; ++i) line[i] = profile(static_cast<Eigen::Index>(i), col);
    for (std::size_t j = 0; j < n; ++j) {
      Complex v;
      if (m % 2 == 0) {
        v = line[wrap(static_cast<long>(j) + m / 2, n)];
      } else {
        // centre j + m/2 = h + 1/2
        v = to_half(line, static_cast<long>(wrap(static_cast<long>(j) + (m - 1) / 2, n)), n);
      }
      entries(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(wrap(static_cast<long>(j) + m, n))) = v * dx;
    }
  }
  return {g, std::move(entries), field.role == Role::observable ? Role::observable : Role::generic};
}

PhaseField wigner_of(const OperatorMatrix& rho) {
  PhaseField f = weyl_transform(rho);
  f.values /= 2.0 * std::numbers::pi * rho.grid.hbar;
  f.role = Role::density;
  return f;
}

TraceValue trace_expectation(const OperatorMatrix& obs, const OperatorMatrix& rho) {
  require_same_grid(obs.grid, rho.grid);
  // Tr(AB) = Σ_ij A_ij B_ji
  const Complex t = obs.entries.cwiseProduct(rho.entries.transpose()).sum();
  return {t.real(), std::abs(t.imag())};
}

double phase_expectation(const PhaseField& obs, const PhaseField& density) {
  require_same_grid(obs.grid, density.grid);
  if (density.role != Role::density) throw PreconditionError("phase_expectation requires a field tagged density");
  return (obs.values.cwiseProduct(density.values)).sum().real() * obs.grid.cell();
}

OperatorMatrix odot_numeric(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_grid(a.grid, b.grid);
  PhaseField fa = weyl_transform(a);
  const PhaseField fb = weyl_transform(b);
  fa.values = fa.values.cwiseProduct(fb.values);
  fa.role = Role::generic;
  return inverse_weyl(fa);
}

Complex odot_kernel_quadrature(const std::function<Complex(double, double)>& kernel_a,
                               const std::function<Complex(double, double)>& kernel_b, double x, double y,
                               double u_max, std::size_t intervals) {
  if (intervals == 0 || !(u_max > 0.0)) throw PreconditionError("quadrature needs a positive range and interval count");
  const double h = 2.0 * u_max / static_cast<double>(intervals);
  Complex sum;
  for (std::size_t k = 0; k <= intervals; ++k) {
    const double u = -u_max + static_cast<double>(k) * h;
    const double wk = (k == 0 || k == intervals) ? 0.5 : 1.0;
    sum += wk * kernel_a((3 * x + y - 2 * u) / 4, (x + 3 * y + 2 * u) / 4) *
           kernel_b((3 * x + y + 2 * u) / 4, (x + 3 * y - 2 * u) / 4);
  }
  return sum * h;
}

PhaseField sample_polynomial(const GridSpec& g, const symbolic::PhasePolynomial& a, Role r) {
  return PhaseField::sample(
      g,
      [&](double q, double p) {
        auto [re, im] = symbolic::evaluate(a, q, p, g.hbar);
        return Complex(re, im);
      },
      r);
}

OperatorMatrix operator_matrix(const GridSpec& g, const symbolic::OperatorPolynomial& a, Role r) {
  OperatorMatrix m = inverse_weyl(sample_polynomial(g, symbolic::weyl_symbol(a)));
  m.role = r;
  return m;
}

}  // namespace weylmech::numeric
