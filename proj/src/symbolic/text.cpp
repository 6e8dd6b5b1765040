#include "weylmech/symbolic/text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "weylmech/symbolic/algebra.hpp"

namespace weylmech::symbolic {

namespace {

struct PrintedTerm {
  Rational value;  // signed
  bool imaginary;
  std::size_t hbar_power;
  int q_power;
  int p_power;
};

void append_power(std::vector<std::string>& factors, const char* name, long power) {
  if (power == 0) return;
  factors.push_back(power == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(power));
}

std::string render(const std::vector<PrintedTerm>& terms, const char* q_name, const char* p_name) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = sgn(t.value) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(t.value);
    std::vector<std::string> factors;
    if (t.imaginary) factors.emplace_back("i");
    append_power(factors, "hbar", static_cast<long>(t.hbar_power));
    append_power(factors, q_name, t.q_power);
    append_power(factors, p_name, t.p_power);
    if (mag != 1 || factors.empty()) factors.insert(factors.begin(), mag.get_str());
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) out += "*";
      out += factors[k];
    }
  }
  return out;
}

template <typename Tag>
std::vector<PrintedTerm> flatten(const SparsePolynomial<Tag>& a) {
  std::vector<PrintedTerm> out;
  for (const auto& [e, c] : a.terms()) {
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
      const auto& x = c.coeffs()[k];
      if (sgn(x.re) != 0) out.push_back({x.re, false, k, e.first, e.second});
      if (sgn(x.im) != 0) out.push_back({x.im, true, k, e.first, e.second});
    }
  }
  return out;
}

struct ParsedFactor {
  Axis axis;
  int power;
};

struct ParsedTerm {
  ComplexRational coefficient{1};
  std::size_t hbar_power = 0;
  std::vector<ParsedFactor> factors;
};

class Parser {
 public:
  Parser(std::string_view text, char q_name, char p_name) : q_(q_name), p_(p_name) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  std::vector<ParsedTerm> parse() {
    if (s_.empty()) fail("empty polynomial");
    std::vector<ParsedTerm> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = s_[pos_++] == '-';
    for (;;) {
      ParsedTerm t = term();
      if (negative) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      if (pos_ == s_.size()) break;
      const char c = s_[pos_++];
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      negative = c == '-';
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  int exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    mpz_class e = integer();
    if (!e.fits_sint_p()) fail("exponent too large");
    return static_cast<int>(e.get_si());
  }

  bool consume(std::string_view word) {
    if (s_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  ParsedTerm term() {
    ParsedTerm t;
    for (;;) {
      factor(t);
      if (peek() != '*') return t;
      ++pos_;
    }
  }

  void factor(ParsedTerm& t) {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational v(integer());
      if (peek() == '/') {
        ++pos_;
        mpz_class d = integer();
        if (d == 0) fail("zero denominator");
        v /= Rational(d);
      }
      t.coefficient *= ComplexRational(v);
    } else if (consume("hbar")) {
      t.hbar_power += static_cast<std::size_t>(exponent());
    } else if (c == 'i') {
      ++pos_;
      t.coefficient *= ComplexRational::i();
    } else if (c == q_ || c == p_) {
      ++pos_;
      t.factors.push_back({c == q_ ? Axis::q : Axis::p, exponent()});
    } else {
      fail(c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'");
    }
  }

  std::string s_;
  std::size_t pos_ = 0;
  char q_;
  char p_;
};

}  // namespace

std::string to_string(const PhasePolynomial& a) { return render(flatten(a), "q", "p"); }
std::string to_string(const OperatorPolynomial& a) { return render(flatten(a), "Q", "P"); }
std::string to_string(const HbarCoefficient& c) { return to_string(PhasePolynomial(c)); }

PhasePolynomial parse_phase(std::string_view text) {
  PhasePolynomial out;
  for (const auto& t : Parser(text, 'q', 'p').parse()) {
    int r = 0, s = 0;
    for (const auto& f : t.factors) (f.axis == Axis::q ? r : s) += f.power;
    out.add_term({r, s}, HbarCoefficient::monomial(t.coefficient, t.hbar_power));
  }
  return out;
}

OperatorPolynomial parse_operator(std::string_view text) {
  OperatorPolynomial out;
  for (const auto& t : Parser(text, 'Q', 'P').parse()) {
    std::vector<WordFactor> word;
    for (const auto& f : t.factors) word.push_back({f.axis, f.power});
    out += normal_form(word) * HbarCoefficient::monomial(t.coefficient, t.hbar_power);
  }
  return out;
}

}  // namespace weylmech::symbolic
