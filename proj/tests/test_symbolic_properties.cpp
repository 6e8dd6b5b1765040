// Randomized identity checks for the exact algebra. Every comparison is exact equality.
#include <doctest.h>

#include <random>

#include "weylmech/symbolic/algebra.hpp"
#include "weylmech/symbolic/text.hpp"

using namespace weylmech::symbolic;

namespace {

class PolyGen {
 public:
  explicit PolyGen(unsigned seed) : rng_(seed) {}

  PhasePolynomial phase(int max_degree, bool real = false) {
    PhasePolynomial out;
    const int nterms = uniform(1, 4);
    for (int t = 0; t < nterms; ++t) {
      const int a = uniform(0, max_degree);
      const int b = uniform(0, max_degree - a);
      Rational re(uniform(-6, 6), uniform(1, 4));
      re.canonicalize();
      Rational im = real ? Rational(0) : Rational(uniform(-3, 3));
      out.add_term({a, b}, HbarCoefficient::monomial(ComplexRational(re, im), static_cast<std::size_t>(uniform(0, 1))));
    }
    return out;
  }

  OperatorPolynomial op(int max_degree) { return weyl_quantize(phase(max_degree)); }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
};

constexpr int kInstances = 200;

}  // namespace

TEST_CASE("weyl roundtrip on random polynomials up to degree 6") {
  PolyGen gen(11);
  for (int k = 0; k < kInstances; ++k) {
    const auto a = gen.phase(6);
    REQUIRE_MESSAGE(weyl_symbol(weyl_quantize(a)) == a, to_string(a));
  }
}

TEST_CASE("quantized real symbols are formally self-adjoint") {
  PolyGen gen(12);
  for (int k = 0; k < kInstances; ++k) {
    const auto a = gen.phase(5, true);
    const auto qa = weyl_quantize(a);
    REQUIRE_MESSAGE(adjoint(qa) == qa, to_string(a));
  }
  // Sanity: a non-symmetric word is not self-adjoint.
  CHECK_FALSE(adjoint(q_hat() * p_hat()) == q_hat() * p_hat());
}

TEST_CASE("star product is associative with two-sided unit") {
  PolyGen gen(13);
  for (int k = 0; k < kInstances; ++k) {
    const auto a = gen.phase(4), b = gen.phase(4), c = gen.phase(4);
    REQUIRE(star_product(star_product(a, b), c) == star_product(a, star_product(b, c)));
    REQUIRE(star_product(PhasePolynomial(1), a) == a);
    REQUIRE(star_product(a, PhasePolynomial(1)) == a);
  }
}

TEST_CASE("star product matches the operator product image") {
  PolyGen gen(14);
  for (int k = 0; k < kInstances; ++k) {
    const auto a = gen.phase(4), b = gen.phase(4);
    REQUIRE(star_product(a, b) == weyl_symbol(weyl_quantize(a) * weyl_quantize(b)));
  }
}

TEST_CASE("moyal bracket degenerates to poisson bracket at formal hbar zero") {
  PolyGen gen(15);
  for (int k = 0; k < kInstances; ++k) {
    const auto a = at_zero_hbar(gen.phase(4)), b = at_zero_hbar(gen.phase(4));
    REQUIRE(at_zero_hbar(moyal_bracket(a, b)) == poisson_bracket(a, b));
  }
}

TEST_CASE("odot product is commutative and associative") {
  PolyGen gen(16);
  for (int k = 0; k < kInstances; ++k) {
    const auto a = gen.op(4), b = gen.op(4), c = gen.op(4);
    REQUIRE(odot_product(a, b) == odot_product(b, a));
    REQUIRE(odot_product(odot_product(a, b), c) == odot_product(a, odot_product(b, c)));
  }
}

TEST_CASE("odot bracket is iħ times the quantized poisson bracket") {
  PolyGen gen(17);
  for (int k = 0; k < kInstances; ++k) {
    const auto a = gen.op(4), b = gen.op(4);
    const auto expected = weyl_quantize(poisson_bracket(weyl_symbol(a), weyl_symbol(b))) * i_hbar();
    REQUIRE(odot_bracket(a, b) == expected);
    REQUIRE(odot_bracket(a, b) == -odot_bracket(b, a));
  }
}

TEST_CASE("odot jacobi identity and derivation property") {
  PolyGen gen(18);
  for (int k = 0; k < kInstances; ++k) {
    const auto a = gen.op(4), b = gen.op(4), c = gen.op(4);
    const auto jacobi = odot_bracket(odot_bracket(a, b), c) + odot_bracket(odot_bracket(b, c), a) +
                        odot_bracket(odot_bracket(c, a), b);
    REQUIRE(jacobi.is_zero());
    REQUIRE(odot_bracket(a, odot_product(b, c)) ==
            odot_product(c, odot_bracket(a, b)) + odot_product(b, odot_bracket(a, c)));
  }
}

TEST_CASE("weyl-ordered monomial product law") {
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l <= 4; ++l)
      for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
          const auto lhs = odot_product(weyl_quantize(PhasePolynomial::monomial(k, l)),
                                        weyl_quantize(PhasePolynomial::monomial(m, n)));
          REQUIRE(lhs == weyl_quantize(PhasePolynomial::monomial(k + m, l + n)));
        }
}

TEST_CASE("series terms reproduce the odot bracket") {
  PolyGen gen(19);
  for (int k = 0; k < kInstances; ++k) {
    const auto a = gen.op(6), b = gen.op(6);
    REQUIRE(odot_bracket_series_sum(a, b) == odot_bracket(a, b));
  }
}

TEST_CASE("quadratic operands have no hbar corrections") {
  PolyGen gen(20);
  for (int k = 0; k < kInstances; ++k) {
    const auto a = gen.phase(2), b = gen.phase(2);
    REQUIRE(moyal_bracket(a, b) == poisson_bracket(a, b));
    const auto qa = weyl_quantize(a), qb = weyl_quantize(b);
    for (int order = 1; order <= kMaxSeriesOrder; ++order) REQUIRE(odot_bracket_series_term(qa, qb, order).is_zero());
  }
}

TEST_CASE("text roundtrip") {
  PolyGen gen(21);
  for (int k = 0; k < kInstances; ++k) {
    const auto a = gen.phase(6);
    REQUIRE(parse_phase(to_string(a)) == a);
    const auto b = gen.op(5);
    REQUIRE(parse_operator(to_string(b)) == b);
  }
}
