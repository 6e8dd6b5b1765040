#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "weylmech/symbolic/polynomial.hpp"

namespace weylmech::symbolic {

// Plain-text polynomial grammar (whitespace ignored):
//
//   polynomial := "0" | [sign] term { sign term }
//   sign       := "+" | "-"
//   term       := factor { "*" factor }
//   factor     := integer [ "/" integer ] | "i" | "hbar" [ "^" integer ]
//               | var [ "^" integer ]
//   var        := "q" | "p"      (phase-space polynomials)
//               | "Q" | "P"      (operators q̂, p̂; factors multiply in the order written)
//
// The printer emits one term per (monomial, hbar power, real/imaginary part), in
// lexicographic monomial order and ascending hbar power, e.g.
//   "q^2*p^3 + 3*i*hbar*q*p^2 - 3/2*hbar^2*p".
// Operators print in normal form, e.g. "Q*P - 1/2*i*hbar".

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(const PhasePolynomial& a);
std::string to_string(const OperatorPolynomial& a);
std::string to_string(const HbarCoefficient& c);

PhasePolynomial parse_phase(std::string_view text);
OperatorPolynomial parse_operator(std::string_view text);

}  // namespace weylmech::symbolic
