#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "maxsym/diffalg/symbol.hpp"

namespace maxsym::diffalg {

using Rational = mpq_class;

// Product of indeterminate powers with nonzero integer exponents, kept sorted
// by Indeterminate. The empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<Indeterminate, int>;

  Monomial() = default;
  explicit Monomial(Indeterminate ind, int exp = 1);
  // Factors may be unsorted and repeated; zero exponents are dropped.
  explicit Monomial(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const { return degree_; }
  int exponent(Indeterminate ind) const;
  // Sum of exponents over all derivatives of base.
  int degree_in(Symbol base) const;

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(int e) const;
  Monomial without(Indeterminate ind) const;
  Monomial times(Indeterminate ind, int delta) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

// Graded order: larger total degree first, then lexicographic on the
// indeterminate ordering (larger exponent of the smallest differing
// indeterminate first).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse Laurent differential polynomial with exact rational coefficients.
// Terms are always combined and free of zero coefficients, so structural
// equality is mathematical equality.
class DiffPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  DiffPoly() = default;
  DiffPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  DiffPoly(int c) : DiffPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit DiffPoly(Indeterminate ind, int exp = 1);
  DiffPoly(const Rational& c, Monomial m);
  // The map must already be combined (no zero coefficients).
  static DiffPoly from_terms(TermMap terms);

  static DiffPoly var(Symbol base, int order = 0, int exp = 1) {
    return DiffPoly(Indeterminate{base, order}, exp);
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Coefficient of the unit monomial.
  Rational constant_term() const;
  bool is_monomial() const { return terms_.size() == 1; }

  DiffPoly& operator+=(const DiffPoly& other);
  DiffPoly& operator-=(const DiffPoly& other);
  DiffPoly& operator*=(const DiffPoly& other);
  DiffPoly operator-() const;

  // Negative exponents are only defined for single-term polynomials.
  DiffPoly pow(int e) const;
  DiffPoly scaled(const Rational& c) const;
  DiffPoly times(const Monomial& m) const;

  bool mentions(Symbol base) const;
  // -1 if base does not occur.
  int max_order(Symbol base) const;
  std::set<Indeterminate> indeterminates() const;
  std::set<Symbol> bases() const;

  bool operator==(const DiffPoly&) const = default;

  // Adds c*m into the map, dropping the entry when it cancels.
  static void accumulate(TermMap& map, const Monomial& m, const Rational& c);

 private:
  friend DiffPoly add(const DiffPoly&, const DiffPoly&);
  friend DiffPoly mul(const DiffPoly&, const DiffPoly&);
  TermMap terms_;
};

DiffPoly add(const DiffPoly& a, const DiffPoly& b);
DiffPoly mul(const DiffPoly& a, const DiffPoly& b);

inline DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
inline DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
inline DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) { return mul(a, b); }

// D_x, extended to every symbol by the Leibniz rule; constant symbols are
// annihilated.
DiffPoly total_derivative(const DiffPoly& p);
DiffPoly total_derivative(const DiffPoly& p, int times);

}  // namespace maxsym::diffalg
