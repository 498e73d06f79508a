#include <cmath>
#include <vector>

#include "doctest.h"
#include "maxsym/diffalg/serialize.hpp"
#include "maxsym/itergen/itergen.hpp"

using namespace maxsym::diffalg;
using namespace maxsym::itergen;

namespace {

DiffPoly P(std::string_view text) { return parse_text(text); }

// Coefficients of prod (lambda^2 + sign*m^2) over m = n-1, n-3, ... > 0, times
// lambda for odd n: the characteristic polynomial whose roots are the
// exponents +-i m (sign = +1) or +-m (sign = -1) of the solutions
// u^(n-1-k) v^k for a constant source q = sign.
std::vector<long long> characteristic(int n, int sign) {
  std::vector<long long> poly{1};
  for (int m = n - 1; m > 0; m -= 2) {
    std::vector<long long> next(poly.size() + 2, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 2] += sign * static_cast<long long>(m) * m * poly[i];
    }
    poly = next;
  }
  if (n % 2 == 1) poly.push_back(0);
  return poly;
}

}  // namespace

TEST_SUITE("itergen") {

TEST_CASE("psi_power") {
  CHECK(psi_power(0, SMode::generic) == P("y"));
  CHECK(psi_power(1, SMode::generic) == P("r*y' + s*y"));
  CHECK(psi_power(2, SMode::generic) == P("r^2*y'' + (r*r' + 2*r*s)*y' + (r*s' + s^2)*y"));
  CHECK_THROWS_AS(psi_power(-1, SMode::generic), std::invalid_argument);
}

TEST_CASE("extract_K small orders") {
  auto k2 = extract_K(2);
  CHECK(k2 == std::vector{P("r^2"), P("r*r' + 2*r*s"), P("r*s' + s^2")});
  CHECK(extract_K(3).front() == P("r^3"));
  CHECK(extract_K(2)[1] == P("r*(2*s + r')"));
  CHECK(k_recurrence(1) == std::vector{P("r"), P("s")});
  CHECK(k_recurrence_sum(3).front() == P("r^3"));
}

TEST_CASE("K recurrences agree with extraction for n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    auto extracted = extract_K(n);
    CHECK(extracted.size() == static_cast<std::size_t>(n + 1));
    CHECK(extracted == k_recurrence(n));
    CHECK(extracted == k_recurrence_sum(n));
    CHECK(extracted.front() == DiffPoly::var(sym::r).pow(n));
    DiffPoly last = P("s");
    for (int i = 1; i < n; ++i) last = psi(last, P("r"), P("s"));
    CHECK(extracted.back() == last);
  }
}

TEST_CASE("closed forms of the first two K") {
  CHECK(closed_form_K12(2) == std::pair{P("r*(2*s + r')"), P("r*s' + s^2")});
  CHECK(closed_form_K12(3).first == P("r^2*(3*s + 3*r')"));
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    auto k = extract_K(n);
    auto [k1, k2] = closed_form_K12(n);
    CHECK(k[1] == k1);
    CHECK(k[2] == k2);
  }
  CHECK_THROWS_AS(closed_form_K12(1), std::invalid_argument);
}

TEST_CASE("phi_n displays") {
  CHECK(phi_n(3).coeff_of_derivative(1) == P("(r'^2 - 2*r*r'')/r^2"));
  CHECK(phi_n(4).coeff_of_derivative(2) == P("5*(r'^2 - 2*r*r'')/(2*r^2)"));
  CHECK(phi_n(2).coeff_of_derivative(0) == P("(r'^2 - 2*r*r'')/(4*r^2)"));
  CHECK(phi_n(2).coeff_of_derivative(0) == script_a(sym::r));
  for (int n = 2; n <= 8; ++n) CHECK(phi_n(n).is_normal());
}

TEST_CASE("q-only equations") {
  CHECK(phi_n_r(2).to_diffpoly() == P("y'' + q*y"));
  CHECK(phi_n_r(3).to_diffpoly() == P("y''' + 4*q*y' + 2*q'*y"));
  CHECK(phi_n_r(4).coeff_of_derivative(0) == P("9*q^2 + 3*q''"));
  CHECK(theta_n_u(3).to_diffpoly() == P("y''' + 4*q*y' + 2*q'*y"));
  CHECK(generate_maxsym(2).to_diffpoly() == P("y'' + q*y"));
  CHECK(generate_maxsym(10).coeff(2) == P("165*q"));
}

TEST_CASE("r path equals u path for n <= 10") {
  for (int n = 2; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(phi_n_r(n) == theta_n_u(n));
  }
}

TEST_CASE("late s-substitution gives the same equation for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(theta_n_u_late_substitution(n) == theta_n_u(n));
  }
}

TEST_CASE("structure of the q-only equation for n <= 15") {
  for (int n = 2; n <= 15; ++n) {
    CAPTURE(n);
    const auto ode = generate_maxsym(n);
    CHECK(ode.variables() == VariableSet::q_only);
    CHECK(ode.is_normal());
    CHECK(ode.coeff(1).is_zero());
    CHECK(ode.coeff(2) == DiffPoly::var(sym::q).scaled(binomial(n + 1, 3)));
    for (const auto& c : ode.coeffs()) {
      CHECK_FALSE(c.mentions(sym::u));
      CHECK_FALSE(c.mentions(sym::r));
      // Setting q to zero leaves y^(n) = 0: no constant terms below the top.
      if (&c != &ode.coeffs().front()) CHECK(c.constant_term() == 0);
    }
  }
}

TEST_CASE("constant sources reproduce the expected characteristic polynomials") {
  for (int sign : {1, -1}) {
    for (int n = 2; n <= 12; ++n) {
      CAPTURE(sign);
      CAPTURE(n);
      const auto ode = generate_maxsym(n);
      Bindings bind{{{sym::q, 0}, static_cast<double>(sign)}};
      for (int k = 1; k <= n; ++k) bind[{sym::q, k}] = 0.0;
      auto want = characteristic(n, sign);
      REQUIRE(want.size() == static_cast<std::size_t>(n + 1));
      for (int j = 0; j <= n; ++j)
        CHECK(evaluate(ode.coeff(j), bind) == static_cast<double>(want[static_cast<std::size_t>(j)]));
    }
  }
}

TEST_CASE("LinearOdeForm validation and serialization") {
  CHECK_THROWS_AS(LinearOdeForm(2, {P("1"), P("0")}, VariableSet::q_only), std::invalid_argument);
  CHECK_THROWS_AS(LinearOdeForm(1, {P("1"), P("y")}, VariableSet::q_only), std::invalid_argument);
  CHECK_THROWS_AS(LinearOdeForm(1, {P("1"), P("r")}, VariableSet::q_only), std::invalid_argument);
  CHECK_THROWS_AS(LinearOdeForm::from_diffpoly(P("y*y'"), 1, VariableSet::q_only), std::invalid_argument);

  CHECK(to_text(generate_maxsym(3)) == "y''' + 4*q*y' + 2*q'*y = 0");
  CHECK(to_text(generate_maxsym(2)) == "y'' + q*y = 0");
  for (int n = 2; n <= 8; ++n) {
    const auto ode = generate_maxsym(n);
    CHECK(ode_from_json(nlohmann::json::parse(to_json(ode).dump())) == ode);
    CHECK(LinearOdeForm::from_diffpoly(ode.to_diffpoly(), n, VariableSet::q_only) == ode);
  }
  auto j = to_json(generate_maxsym(4));
  CHECK(j["order"] == 4);
  CHECK(from_json(j["coefficients"][4]) == P("9*q^2 + 3*q''"));
}

TEST_CASE("binomial") {
  CHECK(binomial(11, 3) == 165);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(5, 0) == 1);
}

}  // TEST_SUITE
