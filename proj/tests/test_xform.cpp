#include <cmath>
#include <random>

#include "doctest.h"
#include "maxsym/diffalg/rewrite.hpp"
#include "maxsym/diffalg/serialize.hpp"
#include "maxsym/itergen/itergen.hpp"
#include "maxsym/numeval/residual.hpp"
#include "maxsym/solbasis/solbasis.hpp"
#include "maxsym/xform/xform.hpp"

using namespace maxsym::xform;
using namespace maxsym::numeval;
using maxsym::diffalg::Bindings;
using maxsym::diffalg::evaluate;
namespace sym = maxsym::diffalg::sym;

namespace {

const Interval kUnit{0.0, 1.0};

Bindings xi_bindings(double d1, double d2, double d3) {
  return {{{sym::h, 1}, d1}, {{sym::h, 2}, d2}, {{sym::h, 3}, d3}};
}

}  // namespace

TEST_SUITE("xform") {

TEST_CASE("symbolic Schwarzian") {
  auto s = schwarzian_symbolic(sym::h);
  CHECK(s.size() == 2);
  CHECK(s == maxsym::diffalg::parse_text("-3/2*h''^2*h'^-2 + h'''*h'^-1"));
  CHECK(evaluate(s, xi_bindings(1.0, 0.0, 0.0)) == 0.0);
  const double e = std::exp(1.0);
  CHECK(evaluate(s, xi_bindings(e, e, e)) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("numeric Schwarzian of Mobius maps vanishes") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  int checked = 0;
  while (checked < 50) {
    double a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
    if (std::abs(a * d - b * c) < 0.1) continue;
    // Keep the pole -d/c away from [0, 1].
    if (c != 0.0 && -d / c > -0.2 && -d / c < 1.2) continue;
    auto f = mobius(a, b, c, d, kUnit);
    for (double z : {0.1, 0.5, 0.9}) CHECK(std::abs(schwarzian_numeric(f, z)) <= 1e-10);
    ++checked;
  }
  CHECK(schwarzian_numeric(exponential(1.0, kUnit), 0.5) == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("A(r) equals half the Schwarzian of the integral of 1/r") {
  auto d = verify_schwarzian_source_identity();
  CHECK(d.is_zero());
  auto doubled = verify_schwarzian_source_identity(2);
  CHECK_FALSE(doubled.is_zero());
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> v(1.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    Bindings b{{{sym::r, 0}, v(rng)}, {{sym::r, 1}, v(rng)}, {{sym::r, 2}, v(rng)}};
    CHECK(std::abs(evaluate(d, b)) <= 1e-12);
  }
}

TEST_CASE("canonical equation maps to the normal form") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(verify_canonical_identity(n).is_zero());
  }
  CHECK_THROWS_AS(verify_canonical_identity(9), std::invalid_argument);
  CHECK(verify_canonical_identity(9, 9).is_zero());
  CHECK_THROWS_AS(verify_canonical_identity(1), std::invalid_argument);
}

TEST_CASE("map_canonical_solution") {
  EquivalenceMap identity(4, constant(1.0, Interval{0.0, 4.0}), 1.0, 0.0);
  CHECK(map_canonical_solution(identity, 2, 3.0) == doctest::Approx(9.0).epsilon(1e-12));

  auto u = exponential(1.0, kUnit);
  EquivalenceMap m2(2, u);
  // h(x) = (1 - e^{-2x})/2 in closed form.
  const double want = std::exp(0.5) * (1.0 - std::exp(-1.0)) / 2.0;
  CHECK(map_canonical_solution(m2, 1, 0.5) == doctest::Approx(want).epsilon(1e-10));
  CHECK(map_canonical_solution(EquivalenceMap(5, u), 0, 0.3) == doctest::Approx(std::exp(1.2)).epsilon(1e-14));
  CHECK(map_canonical_solution(EquivalenceMap(3, u, 2.0), 0, 0.3) ==
        doctest::Approx(std::exp(0.6) / 2.0).epsilon(1e-14));

  CHECK_THROWS_AS(map_canonical_solution(m2, 2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(map_canonical_solution(m2, 1, 1.5), DomainError);
  CHECK_THROWS_AS(EquivalenceMap(2, u, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(EquivalenceMap(2, cosine(1.0, Interval{0.0, 2.0})), DomainError);
}

TEST_CASE("mapped canonical solutions solve the q-only equation") {
  auto u = exponential(1.0, kUnit);
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    auto basis = maxsym::solbasis::basis_from_u(u, n);
    EquivalenceMap map(n, u);
    auto q = source_coefficient_from_u(u, n);
    CHECK(q(0.5) == doctest::Approx(-1.0));
    for (int k = 0; k < n; ++k) {
      for (double x : {0.25, 0.75})
        CHECK(map_canonical_solution(map, k, x) == doctest::Approx(basis.entry(k)(x)).epsilon(1e-12));
      CHECK(residual(maxsym::itergen::generate_maxsym(n), q, basis.entry(k), kUnit.interior_points(20)) <= 1e-8);
    }
  }
}

}  // TEST_SUITE
