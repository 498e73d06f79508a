#pragma once

#include "maxsym/diffalg/diffpoly.hpp"
#include "maxsym/numeval/closed_form.hpp"

namespace maxsym::xform {

using diffalg::DiffPoly;
using diffalg::Rational;

// S(xi) = (-3 xi''^2 + 2 xi' xi''')/(2 xi'^2)
//       = -3/2 xi''^2 xi'^-2 + xi''' xi'^-1
DiffPoly schwarzian_symbolic(diffalg::Symbol base);
double schwarzian_numeric(const numeval::ClosedFormFn& f, double z);

// 1/2 S(h) - scale * A(r) with h' = 1/r. Zero for scale = 1.
DiffPoly verify_schwarzian_source_identity(const Rational& scale = 1);

inline constexpr int kDefaultIdentityCap = 8;

// u^-(n+1) (u^2 D_x)^n [u^-(n-1) y] - Phi_n[y] with r = u^2. The first term is
// the canonical equation w^(n)(z) = 0 carried back through x = f(z),
// y = f'(z)^((n-1)/2) w, h = f^-1 = int dx/u^2 (lambda = 1). Zero for every n.
DiffPoly verify_canonical_identity(int n, int cap = kDefaultIdentityCap);

// x = f(z), y = lambda f'(z)^((n-1)/2) w, with f^-1 = h = int_{x0}^x dt/u^2.
struct EquivalenceMap {
  int n = 2;
  double lambda = 1.0;
  numeval::ClosedFormFn u;
  double x0;  // anchor of h

  // Checks n >= 1, lambda != 0 and that u does not vanish on its interval.
  EquivalenceMap(int order, numeval::ClosedFormFn source, double lambda_ = 1.0);
  EquivalenceMap(int order, numeval::ClosedFormFn source, double lambda_, double anchor);

  double h(double x) const;
};

// Image of w(z) = z^k: u(x)^(n-1) h(x)^k / lambda.
double map_canonical_solution(const EquivalenceMap& map, int k, double x);

}  // namespace maxsym::xform
