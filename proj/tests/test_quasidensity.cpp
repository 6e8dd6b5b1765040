#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "weylmech/errors.hpp"
#include "weylmech/numeric/weyl_transform.hpp"
#include "weylmech/quasidensity/quasidensity.hpp"
#include "weylmech/symbolic/algebra.hpp"
#include "weylmech/symbolic/text.hpp"

using namespace weylmech;
using namespace weylmech::numeric;
using namespace weylmech::quasidensity;
using std::numbers::pi;

namespace {

const GridSpec kWide{256, -16, 16, 1.0};

double relative_kernel_distance(const OperatorMatrix& a, const OperatorMatrix& b) {
  return kernel_distance(a, b) / (b.entries.cwiseAbs().maxCoeff() / b.grid.dx());
}

// Eigenvalues of the gaussian operator whose Wigner function has symplectic
// parameter nu = 1/(ħ√(αβ)): 2/(ν+1)·((ν−1)/(ν+1))^k.
std::vector<double> gaussian_spectrum(double alpha, double beta, double hbar, int count) {
  const double nu = 1.0 / (hbar * std::sqrt(alpha * beta));
  std::vector<double> out;
  for (int k = 0; k < count; ++k) out.push_back(2 / (nu + 1) * std::pow((nu - 1) / (nu + 1), k));
  std::sort(out.rbegin(), out.rend());
  return out;
}

PhaseField shifted_gaussian(const GridSpec& g, double alpha, double beta, double q0, double p0) {
  return PhaseField::sample(
      g,
      [&](double q, double p) {
        return Complex(std::sqrt(alpha * beta) / pi * std::exp(-alpha * (q - q0) * (q - q0) - beta * (p - p0) * (p - p0)));
      },
      Role::density);
}

}  // namespace

TEST_CASE("closed-form gaussian kernel matches the inverse transform of the sampled density") {
  for (double alpha : {0.5, 1.0, 2.0})
    for (double beta : {0.5, 1.0, 2.0}) {
      const auto closed = gaussian_quasidensity(alpha, beta, kWide);
      const auto built = groenewold_from_density(gaussian_class_density(alpha, beta, kWide));
      CAPTURE(alpha);
      CAPTURE(beta);
      CHECK(relative_kernel_distance(built.matrix, closed.matrix) < 1e-6);
      CHECK(built.matrix.role == Role::quasidensity);
      CHECK(std::abs(built.matrix.trace().real() - 1.0) < 1e-9);
      CHECK(std::abs(closed.matrix.trace().real() - 1.0) < 1e-9);
    }
}

TEST_CASE("minimal-uncertainty gaussian is the coherent-state projector") {
  for (double hbar : {1.0, 0.5}) {
    GridSpec g{128, -8, 8, hbar};
    const double alpha = 1.0 / hbar, beta = 1.0 / hbar;
    const auto rho = gaussian_quasidensity(alpha, beta, g);
    const auto proj = OperatorMatrix::projector(g, [&](double x) {
      return Complex(std::pow(alpha / pi, 0.25) * std::exp(-alpha * x * x / 2));
    });
    // they differ only through the wrapped half-box pairs, where the kernel is ~e^{-16}
    CHECK(relative_kernel_distance(rho.matrix, proj) < 1e-6);
    CHECK(rho.matrix.hermiticity_residual() == 0.0);

    const auto rep = spectrum_diagnostics(groenewold_from_density(gaussian_class_density(alpha, beta, g)));
    CHECK(rep.purity == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(rep.min_eigenvalue >= -1e-7);
    CHECK(rep.eigenvalues.front() == doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("spectrum of an over-concentrated gaussian alternates in sign") {
  const auto rep = spectrum_diagnostics(gaussian_quasidensity(2.0, 2.0, kWide));
  const auto ref = gaussian_spectrum(2.0, 2.0, 1.0, 40);
  // largest three and smallest three eigenvalues: 4/3, 4/27, 4/243 and −4/9, −4/81, −4/729
  for (int k = 0; k < 3; ++k) {
    CHECK(rep.eigenvalues[k] == doctest::Approx(ref[k]).epsilon(1e-7));
    CHECK(rep.eigenvalues[rep.eigenvalues.size() - 1 - k] == doctest::Approx(ref[ref.size() - 1 - k]).epsilon(1e-7));
  }
  CHECK(rep.min_eigenvalue == doctest::Approx(-4.0 / 9).epsilon(1e-7));
  CHECK(rep.min_eigenvalue < -kNegativityThreshold);
  CHECK(rep.negativity_mass == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(rep.purity == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(rep.trace == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.largest_singular_value == doctest::Approx(4.0 / 3).epsilon(1e-7));

  double sum = 0, squares = 0;
  for (double l : rep.eigenvalues) sum += l, squares += l * l;
  CHECK(std::abs(sum - rep.trace) < 1e-8);
  CHECK(std::abs(squares - rep.purity) < 1e-8);
  CHECK(std::is_sorted(rep.eigenvalues.rbegin(), rep.eigenvalues.rend()));
}

TEST_CASE("positivity holds at and below minimal uncertainty product and fails above") {
  struct Point { double alpha, beta, hbar; };
  for (const Point pt : {Point{0.5, 0.5, 1}, Point{1, 0.5, 1}, Point{0.5, 2, 1}, Point{2, 2, 0.5}, Point{1, 1, 1},
                         Point{1, 2, 1}, Point{2, 1.5, 1}, Point{2, 2, 1}, Point{2, 4, 0.5}}) {
    const auto rep = spectrum_diagnostics(gaussian_quasidensity(pt.alpha, pt.beta, GridSpec{256, -16, 16, pt.hbar}));
    const double product = pt.alpha * pt.beta * pt.hbar * pt.hbar;
    CAPTURE(product);
    CHECK(rep.min_eigenvalue == doctest::Approx(gaussian_spectrum(pt.alpha, pt.beta, pt.hbar, 60).back()).epsilon(1e-6));
    if (product <= 1)
      CHECK(rep.min_eigenvalue >= -1e-7);
    else if (product >= 2)
      CHECK(rep.min_eigenvalue < -kNegativityThreshold);
    // purity is 2πħ∫ρ_C² = ħ√(αβ)
    CHECK(rep.purity == doctest::Approx(std::sqrt(product)).epsilon(1e-6));
  }
}

TEST_CASE("equal mixture of two separated coherent states has purity one half") {
  GridSpec g;
  auto mix = shifted_gaussian(g, 1.0, 1.0, -3.0, 0.0);
  mix.values = 0.5 * (mix.values + shifted_gaussian(g, 1.0, 1.0, 3.0, 0.5).values);
  const auto rep = spectrum_diagnostics(groenewold_from_density(mix));
  CHECK(rep.purity == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(rep.min_eigenvalue >= -1e-6);
  // rank two with eigenvalues (1 ± |⟨a|b⟩|)/2, |⟨a|b⟩| = exp(−(αΔq² + Δp²/α)/4)
  const double overlap = std::exp(-(36.0 + 0.25) / 4);
  CHECK(rep.eigenvalues[0] == doctest::Approx(0.5 * (1 + overlap)).epsilon(1e-9));
  CHECK(rep.eigenvalues[1] == doctest::Approx(0.5 * (1 - overlap)).epsilon(1e-9));
  CHECK(std::abs(rep.eigenvalues[2]) < 1e-7);
}

TEST_CASE("groenewold map is linear on convex mixtures") {
  GridSpec g;
  const auto a = shifted_gaussian(g, 1.0, 1.2, 0.5, -0.5);
  const auto b = shifted_gaussian(g, 0.8, 1.0, -1.0, 1.0);
  PhaseField mix(g, 0.3 * a.values + 0.7 * b.values, Role::density);
  const auto lhs = groenewold_from_density(mix).matrix;
  const ComplexMatrix rhs = 0.3 * groenewold_from_density(a).matrix.entries + 0.7 * groenewold_from_density(b).matrix.entries;
  CHECK((lhs.entries - rhs).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("quadratic expectations agree between operator and phase-space routes for every hbar") {
  const double alpha = 0.8, beta = 1.0, q0 = 0.6, p0 = -0.4;
  const auto obs = symbolic::parse_phase("q^2 + 3/2*q*p - 2*p^2 + q - 5*p + 7");
  // moments of the shifted gaussian
  const double q2 = q0 * q0 + 1 / (2 * alpha), p2 = p0 * p0 + 1 / (2 * beta);
  const double exact = q2 + 1.5 * q0 * p0 - 2 * p2 + q0 - 5 * p0 + 7;
  for (double hbar : {0.5, 1.0, 2.0}) {
    GridSpec g{256, -16, 16, hbar};
    const auto rho_c = shifted_gaussian(g, alpha, beta, q0, p0);
    const auto rho = groenewold_from_density(rho_c);
    const auto op = operator_matrix(g, symbolic::weyl_quantize(obs), Role::observable);
    const auto tr = trace_expectation(op, rho.matrix);
    const double ph = phase_expectation(sample_polynomial(g, obs), rho_c);
    CAPTURE(hbar);
    CHECK(tr.value == doctest::Approx(ph).epsilon(1e-6));
    CHECK(tr.value == doctest::Approx(exact).epsilon(1e-6));
    CHECK(ph == doctest::Approx(exact).epsilon(1e-6));
    CHECK(tr.imaginary_residual < 1e-8);
  }
}

TEST_CASE("point density maps to the antidiagonal") {
  GridSpec g{64, -4, 4, 1.0};
  const auto rho = groenewold_from_density(point_density(g), "point").matrix;
  CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  const double dx = g.dx();
  // even-separation pairs with x + y = 0 carry 1/dx; the half-lattice neighbours
  // carry the rest, so each row integrates to 2 as for 2δ(x + y). Rows whose
  // neighbourhood reaches separation n/2 are skipped.
  for (std::size_t j = 17; j < 48; ++j) CHECK(rho.kernel(j, g.n - j).real() == doctest::Approx(1.0 / dx).epsilon(1e-12));
  for (std::size_t j = 22; j < 43; ++j) {
    CHECK(rho.entries.row(j).sum().real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(rho.kernel(j, g.n - j + 13)) < 1e-12);
  }
  double residual = 0;
  for (std::size_t j = 0; j < g.n; ++j)
    for (std::size_t l = 0; l < g.n; ++l)
      if (2 * wrapped_separation(j, l, g.n) != -static_cast<long>(g.n))
        residual = std::max(residual, std::abs(rho.entries(j, l) - std::conj(rho.entries(l, j))));
  CHECK(residual < 1e-12);
  CHECK_THROWS_AS(point_density(GridSpec{64, -4.1, 4, 1.0}), PreconditionError);
}

TEST_CASE("invalid densities and operators are rejected") {
  GridSpec g;
  auto f = gaussian_class_density(1.0, 1.0, g);
  auto scaled = f;
  scaled.values *= 1.01;
  CHECK_THROWS_AS(groenewold_from_density(scaled), PreconditionError);
  auto complex = f;
  complex.values(64, 64) += Complex(0, 1e-3);
  CHECK_THROWS_AS(groenewold_from_density(complex), PreconditionError);
  auto untagged = f;
  untagged.role = Role::generic;
  CHECK_THROWS_AS(groenewold_from_density(untagged), PreconditionError);

  CHECK_THROWS_AS(gaussian_quasidensity(8.0, 1.0, g), PreconditionError);  // 2.8 samples per σ
  CHECK_THROWS_AS(gaussian_quasidensity(1.0, 8.0, g), PreconditionError);  // separation tail wraps
  CHECK_THROWS_AS(gaussian_quasidensity(-1.0, 1.0, g), PreconditionError);
  CHECK_NOTHROW(gaussian_quasidensity(1.0, 1.0, g));

  auto skew = OperatorMatrix::identity(g);
  skew.entries(0, 1) = Complex(0, 1);
  CHECK_THROWS_AS(spectrum_diagnostics(skew), PreconditionError);
}

TEST_CASE("spectrum report renders as flat json") {
  SpectrumReport r;
  r.eigenvalues = {0.75, 0.25};
  r.trace = 1;
  r.purity = 0.625;
  r.min_eigenvalue = 0.25;
  r.largest_singular_value = 0.75;
  r.hermiticity_residual = 1.0 / 3;
  CHECK(to_json(r) ==
        "{\"trace\": 1, \"purity\": 0.625, \"min_eigenvalue\": 0.25, \"negativity_mass\": 0, "
        "\"largest_singular_value\": 0.75, \"hermiticity_residual\": 0.33333333333333331, "
        "\"eigenvalues\": [0.75, 0.25]}");
}
