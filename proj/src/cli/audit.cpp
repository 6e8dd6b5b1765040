#include "weylmech/cli/audit.hpp"

#include <functional>
#include <initializer_list>
#include <random>

#include "json_render.hpp"
#include "weylmech/symbolic/algebra.hpp"
#include "weylmech/symbolic/text.hpp"

namespace weylmech::cli {

using namespace symbolic;

namespace {

class PolyGen {
 public:
  PolyGen(std::uint64_t seed, int max_degree) : rng_(seed), max_degree_(max_degree) {}

  PhasePolynomial phase(bool real = false) { return phase_of_degree(max_degree_, real); }

  PhasePolynomial phase_of_degree(int degree, bool real = false) {
    PhasePolynomial out;
    const int nterms = uniform(1, 4);
    for (int t = 0; t < nterms; ++t) {
      const int a = uniform(0, degree);
      const int b = uniform(0, degree - a);
      Rational re(uniform(-6, 6), uniform(1, 4));
      re.canonicalize();
      const Rational im = real ? Rational(0) : Rational(uniform(-3, 3));
      out.add_term({a, b}, HbarCoefficient::monomial(ComplexRational(re, im), static_cast<std::size_t>(uniform(0, 1))));
    }
    return out;
  }

  OperatorPolynomial op() { return weyl_quantize(phase()); }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
  int max_degree_;
};

// check returns true on pass; on failure it describes the operands in `why`
using Check = std::function<bool(PolyGen&, std::string& why)>;

AuditRow run(const std::string& name, int instances, PolyGen& gen, const Check& check) {
  AuditRow row{name, instances, 0, {}};
  for (int k = 0; k < instances; ++k) {
    std::string why;
    if (!check(gen, why)) {
      if (row.failures++ == 0) row.first_failure = why;
    }
  }
  return row;
}

std::string list(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ; ") + p;
  return out;
}

}  // namespace

bool AuditReport::passed() const {
  for (const auto& r : rows)
    if (!r.passed()) return false;
  for (const auto& r : records)
    if (!r.matches_oracle()) return false;
  return !rows.empty();
}

std::string AuditReport::csv() const {
  std::string out = "check,instances,failures,status,note\n";
  for (const auto& r : rows)
    out += r.identity + "," + std::to_string(r.instances) + "," + std::to_string(r.failures) + "," +
           (r.passed() ? "pass" : "fail") + "," + r.first_failure + "\n";
  for (const auto& r : records)
    out += "value " + r.expression + ",1," + (r.matches_oracle() ? "0,pass," : "1,fail,") +
           (r.matches_published() ? "" : "published value differs: " + r.published) + "\n";
  return out;
}

std::string AuditReport::json() const {
  Json j;
  j["passed"] = passed();
  Json rs = Json::array();
  for (const auto& r : rows)
    rs.push_back({{"identity", r.identity},
                  {"instances", r.instances},
                  {"failures", r.failures},
                  {"passed", r.passed()},
                  {"first_failure", r.first_failure}});
  j["identities"] = rs;
  Json rec = Json::array();
  for (const auto& r : records)
    rec.push_back({{"expression", r.expression},
                   {"computed", r.computed},
                   {"oracle", r.oracle},
                   {"published", r.published},
                   {"matches_oracle", r.matches_oracle()},
                   {"matches_published", r.matches_published()}});
  j["records"] = rec;
  return render(j);
}

AuditReport symbolic_audit(std::uint64_t seed, int instances, int max_degree) {
  if (instances < 1 || max_degree < 1) throw std::invalid_argument("symbolic_audit needs instances ≥ 1 and degree ≥ 1");
  PolyGen gen(seed, max_degree);
  AuditReport report;
  auto& rows = report.rows;

  rows.push_back(run("weyl roundtrip", instances, gen, [](PolyGen& g, std::string& why) {
    const auto a = g.phase();
    if (weyl_symbol(weyl_quantize(a)) == a) return true;
    why = to_string(a);
    return false;
  }));
  rows.push_back(run("real symbols quantize self-adjoint", instances, gen, [](PolyGen& g, std::string& why) {
    const auto qa = weyl_quantize(g.phase(true));
    if (adjoint(qa) == qa) return true;
    why = to_string(qa);
    return false;
  }));
  rows.push_back(run("star associativity and unit", instances, gen, [](PolyGen& g, std::string& why) {
    const auto a = g.phase(), b = g.phase(), c = g.phase();
    const PhasePolynomial one(1);
    if (star_product(star_product(a, b), c) == star_product(a, star_product(b, c)) && star_product(one, a) == a &&
        star_product(a, one) == a)
      return true;
    why = list({to_string(a), to_string(b), to_string(c)});
    return false;
  }));
  rows.push_back(run("star is the operator product image", instances, gen, [](PolyGen& g, std::string& why) {
    const auto a = g.phase(), b = g.phase();
    if (star_product(a, b) == weyl_symbol(weyl_quantize(a) * weyl_quantize(b))) return true;
    why = list({to_string(a), to_string(b)});
    return false;
  }));
  rows.push_back(run("moyal bracket at hbar zero", instances, gen, [](PolyGen& g, std::string& why) {
    const auto a = at_zero_hbar(g.phase()), b = at_zero_hbar(g.phase());
    if (at_zero_hbar(moyal_bracket(a, b)) == poisson_bracket(a, b)) return true;
    why = list({to_string(a), to_string(b)});
    return false;
  }));
  rows.push_back(run("odot commutativity", instances, gen, [](PolyGen& g, std::string& why) {
    const auto a = g.op(), b = g.op();
    if (odot_product(a, b) == odot_product(b, a)) return true;
    why = list({to_string(a), to_string(b)});
    return false;
  }));
  rows.push_back(run("odot associativity", instances, gen, [](PolyGen& g, std::string& why) {
    const auto a = g.op(), b = g.op(), c = g.op();
    if (odot_product(odot_product(a, b), c) == odot_product(a, odot_product(b, c))) return true;
    why = list({to_string(a), to_string(b), to_string(c)});
    return false;
  }));
  rows.push_back(run("odot bracket is quantized poisson bracket", instances, gen, [](PolyGen& g, std::string& why) {
    const auto a = g.op(), b = g.op();
    const auto expected = weyl_quantize(poisson_bracket(weyl_symbol(a), weyl_symbol(b))) * i_hbar();
    const auto ab = odot_bracket(a, b);
    if (ab == expected && ab == -odot_bracket(b, a)) return true;
    why = list({to_string(a), to_string(b)});
    return false;
  }));
  rows.push_back(run("odot jacobi", instances, gen, [](PolyGen& g, std::string& why) {
    const auto a = g.op(), b = g.op(), c = g.op();
    const auto jacobi = odot_bracket(odot_bracket(a, b), c) + odot_bracket(odot_bracket(b, c), a) +
                        odot_bracket(odot_bracket(c, a), b);
    if (jacobi.is_zero()) return true;
    why = list({to_string(a), to_string(b), to_string(c)});
    return false;
  }));
  rows.push_back(run("odot derivation", instances, gen, [](PolyGen& g, std::string& why) {
    const auto a = g.op(), b = g.op(), c = g.op();
    if (odot_bracket(a, odot_product(b, c)) == odot_product(c, odot_bracket(a, b)) + odot_product(b, odot_bracket(a, c)))
      return true;
    why = list({to_string(a), to_string(b), to_string(c)});
    return false;
  }));
  rows.push_back(run("odot bracket series sum", instances, gen, [](PolyGen& g, std::string& why) {
    const auto a = g.op(), b = g.op();
    if (odot_bracket_series_sum(a, b) == odot_bracket(a, b)) return true;
    why = list({to_string(a), to_string(b)});
    return false;
  }));
  rows.push_back(run("quadratic operands have no corrections", instances, gen, [](PolyGen& g, std::string& why) {
    const auto a = g.phase_of_degree(2), b = g.phase_of_degree(2);
    bool ok = moyal_bracket(a, b) == poisson_bracket(a, b);
    const auto qa = weyl_quantize(a), qb = weyl_quantize(b);
    for (int order = 1; order <= kMaxSeriesOrder; ++order) ok = ok && odot_bracket_series_term(qa, qb, order).is_zero();
    if (!ok) why = list({to_string(a), to_string(b)});
    return ok;
  }));

  // deterministic sweep over every pair of monomials within the degree bound
  AuditRow monomials{"weyl-ordered monomial product law", 0, 0, {}};
  for (int k = 0; k <= max_degree; ++k)
    for (int l = 0; k + l <= max_degree; ++l)
      for (int m = 0; m <= max_degree; ++m)
        for (int n = 0; m + n <= max_degree; ++n) {
          ++monomials.instances;
          const auto lhs = odot_product(weyl_quantize(PhasePolynomial::monomial(k, l)),
                                        weyl_quantize(PhasePolynomial::monomial(m, n)));
          if (!(lhs == weyl_quantize(PhasePolynomial::monomial(k + m, l + n))) && monomials.failures++ == 0)
            monomials.first_failure = "q^" + std::to_string(k) + "*p^" + std::to_string(l) + " with q^" +
                                      std::to_string(m) + "*p^" + std::to_string(n);
        }
  rows.push_back(monomials);

  // oracles below were expanded by hand from P Q = Q P − iħ
  auto phase_record = [](std::string expr, const PhasePolynomial& v, std::string_view oracle, std::string_view pub) {
    return AuditRecord{std::move(expr), to_string(v), to_string(parse_phase(oracle)), to_string(parse_phase(pub))};
  };
  auto op_record = [](std::string expr, const OperatorPolynomial& v, std::string_view oracle, std::string_view pub) {
    return AuditRecord{std::move(expr), to_string(v), to_string(parse_operator(oracle)),
                       to_string(parse_operator(pub))};
  };
  report.records.push_back(
      phase_record("q star p", star_product(q_sym(), p_sym()), "q*p + 1/2*i*hbar", "q*p + 1/2*i*hbar"));
  report.records.push_back(
      op_record("Q odot P", odot_product(q_hat(), p_hat()), "Q*P - 1/2*i*hbar", "1/2*Q*P + 1/2*P*Q"));
  report.records.push_back(op_record("Q^2 odot P^3", odot_product(q_hat(2), p_hat(3)),
                                     "Q^2*P^3 - 3*i*hbar*Q*P^2 - 3/2*hbar^2*P",
                                     "1/4*Q^2*P^3 + 1/2*Q*P^3*Q + 1/4*P^3*Q^2"));
  report.records.push_back(phase_record("q^2 star p^3", star_product(q_sym(2), p_sym(3)),
                                        "q^2*p^3 + 3*i*hbar*q*p^2 - 3/2*hbar^2*p",
                                        "q^2*p^3 + 3*i*hbar*q*p^2 - 3*hbar^2*p"));
  return report;
}

}  // namespace weylmech::cli
