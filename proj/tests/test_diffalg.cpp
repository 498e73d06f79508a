#include <cmath>
#include <random>

#include "doctest.h"
#include "maxsym/diffalg/diffpoly.hpp"
#include "maxsym/diffalg/rewrite.hpp"
#include "maxsym/diffalg/serialize.hpp"
#include "random_poly.hpp"

using namespace maxsym::diffalg;
using maxsym::testing::random_poly;

namespace {

DiffPoly P(std::string_view text) { return parse_text(text); }
DiffPoly var(Symbol s, int order = 0, int exp = 1) { return DiffPoly::var(s, order, exp); }

}  // namespace

TEST_SUITE("diffalg") {

TEST_CASE("symbol registry") {
  CHECK(sym::q.name() == "q");
  CHECK(sym::W.is_constant());
  CHECK_FALSE(sym::u.is_constant());
  CHECK(find_symbol("rho").has_value());
  CHECK_FALSE(find_symbol("zeta_unregistered").has_value());
  CHECK_THROWS_AS(symbol("zeta_unregistered"), std::invalid_argument);
  CHECK(Indeterminate(sym::u, 1).derivative(2) == Indeterminate(sym::u, 3));
}

TEST_CASE("add") {
  DiffPoly p = P("3*q^2*r' - r^-1");
  CHECK(DiffPoly() + p == p);
  CHECK(P("2*q'") + P("-2*q'") == DiffPoly());
  CHECK((P("q*r") + P("q*r")) == P("2*q*r"));
}

TEST_CASE("mul") {
  CHECK(var(sym::r, 0, -1) * var(sym::r) == DiffPoly(1));
  CHECK(P("(u + u')*(u - u')") == P("u^2 - u'^2"));
  CHECK(var(sym::r, 0, -2) * P("r'^2 - 2*r*r''") == P("r'^2*r^-2 - 2*r''*r^-1"));
}

TEST_CASE("monomial order is graded then lexicographic") {
  // Degree 3 before degree 2; among equal degree the larger power of the
  // smaller indeterminate comes first.
  DiffPoly p = P("q' + q^3 + q*r + q^2");
  std::vector<std::string> order;
  for (const auto& [m, c] : p.terms()) order.push_back(to_text(DiffPoly(c, m)));
  CHECK(order == std::vector<std::string>{"q^3", "q^2", "q*r", "q'"});
}

TEST_CASE("coefficients are kept reduced") {
  CHECK(DiffPoly(Rational(2, 4)) == DiffPoly(Rational(1, 2)));
  CHECK(var(sym::q).scaled(Rational(6, 4)) == P("3/2*q"));
  CHECK(to_text(var(sym::q).scaled(Rational(-2, 2))) == "-q");
}

TEST_CASE("total_derivative") {
  CHECK(total_derivative(var(sym::q)) == var(sym::q, 1));
  CHECK(total_derivative(var(sym::r, 0, -1)) == P("-r'*r^-2"));
  CHECK(total_derivative(P("u*u'")) == P("u'^2 + u*u''"));
  CHECK(total_derivative(var(sym::W)) == DiffPoly());
  CHECK(total_derivative(P("7")) == DiffPoly());
}

TEST_CASE("negative powers only of monomials") {
  CHECK(P("2*r^3").pow(-2) == P("1/4*r^-6"));
  CHECK_THROWS_AS(P("r + q").pow(-1), std::domain_error);
}

TEST_CASE("reduce_fixpoint") {
  RewriteRule seed{{sym::u, 2}, P("-q*u")};
  CHECK(reduce_fixpoint(var(sym::u, 2), std::vector{seed}) == P("-q*u"));
  auto table = build_rule_table(sym::u, 3, seed);
  CHECK(reduce_fixpoint(var(sym::u, 3), table) == P("-q'*u - q*u'"));
  CHECK(reduce_fixpoint(var(sym::q, 1), table) == var(sym::q, 1));
}

TEST_CASE("build_rule_table") {
  RewriteRule useed{{sym::u, 2}, P("-q*u")};
  auto t3 = build_rule_table(sym::u, 3, useed);
  REQUIRE(t3.size() == 2);
  CHECK(t3[0].target == Indeterminate(sym::u, 2));
  CHECK(t3[1].replacement == P("-q'*u - q*u'"));

  auto t4 = build_rule_table(sym::u, 4, useed);
  REQUIRE(t4.size() == 3);
  CHECK(t4[2].replacement == P("-q''*u - 2*q'*u' + q^2*u"));

  RewriteRule rseed{{sym::r, 2}, P("(r'^2 - 4*q*r^2)/(2*r)")};
  auto tr = build_rule_table(sym::r, 2, rseed);
  REQUIRE(tr.size() == 1);
  CHECK(tr[0].replacement == rseed.replacement);

  // Replacements mention only base, base' and q-derivatives.
  for (const auto& rule : build_rule_table(sym::u, 8, useed)) CHECK(rule.replacement.max_order(sym::u) <= 1);

  CHECK_THROWS_AS(build_rule_table(sym::u, 3, RewriteRule{{sym::u, 2}, P("u'''")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_rule_table(sym::r, 3, useed), std::invalid_argument);
}

TEST_CASE("an incomplete table trips the step budget instead of looping") {
  // u'' -> u'' + u is not a valid rule; bypass validate by looping two rules.
  RewriteRule a{{sym::u, 1}, P("v")};
  RewriteRule b{{sym::v, 0}, P("u'")};
  CHECK_THROWS_AS(reduce_fixpoint(var(sym::u, 1), std::vector{a, b}, 50), RewriteBudgetExceeded);
}

TEST_CASE("coefficient_of") {
  CHECK(coefficient_of(P("r^2*y'' + s*y"), {sym::y, 2}) == P("r^2"));
  CHECK(coefficient_of(P("2*q'*y + 4*q*y' + y'''"), {sym::y, 1}) == P("4*q"));
  CHECK(coefficient_of(P("2*q'*y + 4*q*y'"), {sym::y, 2}) == DiffPoly());
  CHECK_THROWS_AS(coefficient_of(P("y*y'"), {sym::y, 1}), NonlinearError);
  CHECK_THROWS_AS(coefficient_of(P("y^-1*q"), {sym::y, 0}), NonlinearError);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(P("q'^2"), {{{sym::q, 1}, 3.0}}) == 9.0);
  CHECK_THROWS_AS(evaluate(P("r^-1"), {{{sym::r, 0}, 0.0}}), EvaluationError);
  CHECK_THROWS_AS(evaluate(P("r*q"), {{{sym::r, 0}, 1.0}}), EvaluationError);
  CHECK(evaluate(P("9*q^2 + 3*q''"), {{{sym::q, 0}, 1.0}, {{sym::q, 2}, 2.0}}) == 15.0);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    DiffPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == DiffPoly());
    CHECK(a * DiffPoly(1) == a);
  }
}

TEST_CASE("total derivative is a derivation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    DiffPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(total_derivative(a * b) == a * total_derivative(b) + total_derivative(a) * b);
    CHECK(total_derivative(a + b) == total_derivative(a) + total_derivative(b));
  }
}

TEST_CASE("reduction is idempotent and leaves no targets") {
  std::mt19937 rng(99);
  auto table = build_rule_table(sym::u, 6, {{sym::u, 2}, P("-q*u")});
  for (int trial = 0; trial < 100; ++trial) {
    DiffPoly p = total_derivative(total_derivative(random_poly(rng)));
    DiffPoly once = reduce_fixpoint(p, table);
    CHECK(once.max_order(sym::u) <= 1);
    CHECK(reduce_fixpoint(once, table) == once);
  }
}

TEST_CASE("evaluate is a ring homomorphism") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> value(0.5, 2.0);
  Bindings bind;
  for (auto s : {sym::q, sym::r, sym::u})
    for (int k = 0; k <= 3; ++k) bind[{s, k}] = value(rng);
  for (int trial = 0; trial < 200; ++trial) {
    DiffPoly a = random_poly(rng), b = random_poly(rng);
    double ea = evaluate(a, bind), eb = evaluate(b, bind);
    double prod = evaluate(a * b, bind);
    CHECK(std::abs(prod - ea * eb) <= 1e-12 * std::max({1.0, std::abs(prod), std::abs(ea * eb)}));
    double sum = evaluate(a + b, bind);
    CHECK(std::abs(sum - (ea + eb)) <= 1e-12 * std::max({1.0, std::abs(ea), std::abs(eb)}));
  }
}

}  // TEST_SUITE
