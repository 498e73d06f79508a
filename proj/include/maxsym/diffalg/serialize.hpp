#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "maxsym/diffalg/diffpoly.hpp"

namespace maxsym::diffalg {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "p" for integers, "p/q" otherwise.
std::string rational_text(const Rational& c);
Rational parse_rational(std::string_view text);

// Canonical text, e.g. "2*q^2*q' - 3*u^(4)". Derivative orders up to three
// print as primes, higher orders as ^(k); powers as ^e with e possibly
// negative.
std::string to_text(Indeterminate ind, int exp = 1);
std::string to_text(const DiffPoly& p);
// Renders terms in the given order instead of the canonical one.
std::string to_text(std::span<const std::pair<Monomial, Rational>> terms);

// Accepts the canonical text plus parentheses, "/" by single-term divisors,
// ^(k) for any derivative order and integer powers of parenthesized groups.
// Unknown symbols are rejected.
DiffPoly parse_text(std::string_view text);

// {"terms":[{"coeff":"p/q","factors":[{"base":"q","order":1,"exp":2}]}]}
nlohmann::json to_json(const DiffPoly& p);
DiffPoly from_json(const nlohmann::json& j);

// Primes up to order two, parenthesized superscripts beyond.
std::string to_latex(Indeterminate ind, int exp = 1);
std::string to_latex(const DiffPoly& p);
std::string to_latex(std::span<const std::pair<Monomial, Rational>> terms);

}  // namespace maxsym::diffalg
