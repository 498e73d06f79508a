#pragma once

#include <random>

#include "maxsym/diffalg/diffpoly.hpp"

namespace maxsym::testing {

// Small random Laurent polynomials over q, r, u with derivative orders <= 3.
// Negative exponents only on undifferentiated r and u, which is where the
// generators put them.
inline diffalg::DiffPoly random_poly(std::mt19937& rng, int max_terms = 4) {
  namespace sym = diffalg::sym;
  const diffalg::Symbol bases[] = {sym::q, sym::r, sym::u};
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> factors(0, 3);
  std::uniform_int_distribution<int> base(0, 2);
  std::uniform_int_distribution<int> order(0, 3);
  std::uniform_int_distribution<int> exp(-2, 3);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  diffalg::DiffPoly out;
  for (int t = terms(rng); t > 0; --t) {
    diffalg::DiffPoly term(diffalg::Rational(num(rng), den(rng)));
    for (int f = factors(rng); f > 0; --f) {
      auto b = bases[base(rng)];
      int e = exp(rng);
      if (e == 0) continue;
      int k = order(rng);
      if ((b == sym::q || k > 0) && e < 0) e = -e;
      term *= diffalg::DiffPoly::var(b, k, e);
    }
    out += term;
  }
  return out;
}

}  // namespace maxsym::testing
