#include "maxsym/xform/xform.hpp"

#include <cmath>
#include <string>

#include "maxsym/diffalg/rewrite.hpp"
#include "maxsym/itergen/itergen.hpp"
#include "maxsym/numeval/quadrature.hpp"

namespace maxsym::xform {

using diffalg::RewriteRule;
using diffalg::total_derivative;
namespace sym = diffalg::sym;

DiffPoly schwarzian_symbolic(diffalg::Symbol base) {
  DiffPoly d1 = DiffPoly::var(base, 1);
  DiffPoly d2 = DiffPoly::var(base, 2);
  DiffPoly d3 = DiffPoly::var(base, 3);
  return (d2.pow(2) * d1.pow(-2)).scaled(Rational(-3, 2)) + d3 * d1.pow(-1);
}

double schwarzian_numeric(const numeval::ClosedFormFn& f, double z) {
  double d1 = f.deriv(1, z);
  double d2 = f.deriv(2, z);
  double d3 = f.deriv(3, z);
  if (d1 == 0.0) throw numeval::DomainError("Schwarzian undefined where f' = 0");
  return (-3.0 * d2 * d2 + 2.0 * d1 * d3) / (2.0 * d1 * d1);
}

DiffPoly verify_schwarzian_source_identity(const Rational& scale) {
  auto h_rules = diffalg::build_rule_table(
      sym::h, 3, RewriteRule{{sym::h, 1}, DiffPoly::var(sym::r, 0, -1)});
  DiffPoly half_s = diffalg::reduce_fixpoint(schwarzian_symbolic(sym::h), h_rules)
                        .scaled(Rational(1, 2));
  return half_s - itergen::script_a(sym::r).scaled(scale);
}

DiffPoly verify_canonical_identity(int n, int cap) {
  if (n < 2 || n > cap)
    throw std::invalid_argument("verify_canonical_identity: order " + std::to_string(n) +
                                " outside [2, " + std::to_string(cap) + "]");
  const DiffPoly u = DiffPoly::var(sym::u);
  const DiffPoly u_sq = u * u;
  // d/dz = r d/dx along the map.
  DiffPoly transported = u.pow(-(n - 1)) * DiffPoly::var(sym::y);
  for (int i = 0; i < n; ++i) transported = u_sq * total_derivative(transported);
  transported = transported * u.pow(-(n + 1));

  DiffPoly s = u * DiffPoly::var(sym::u, 1).scaled(-(n - 1));
  DiffPoly phi = itergen::psi_power(n, u_sq, s) * u.pow(-2 * n);
  return transported - phi;
}

EquivalenceMap::EquivalenceMap(int order, numeval::ClosedFormFn source, double lambda_)
    : EquivalenceMap(order, source, lambda_, source.interval().lo) {}

EquivalenceMap::EquivalenceMap(int order, numeval::ClosedFormFn source, double lambda_,
                               double anchor)
    : n(order), lambda(lambda_), u(std::move(source)), x0(anchor) {
  if (n < 1) throw std::invalid_argument("EquivalenceMap: order must be >= 1");
  if (lambda == 0.0) throw std::invalid_argument("EquivalenceMap: lambda must be nonzero");
  if (!u.interval().contains(x0)) throw numeval::DomainError("EquivalenceMap: anchor outside interval");
  const auto& iv = u.interval();
  double first = u(iv.lo);
  for (int i = 0; i <= 64; ++i) {
    double v = u(iv.lo + iv.width() * i / 64.0);
    if (v == 0.0 || std::signbit(v) != std::signbit(first))
      throw numeval::DomainError("EquivalenceMap: " + u.label() + " vanishes on the interval");
  }
}

double EquivalenceMap::h(double x) const {
  if (!u.interval().contains(x)) throw numeval::DomainError("EquivalenceMap: x outside interval");
  return numeval::adaptive_simpson(
      [this](double t) {
        double v = u(t);
        return 1.0 / (v * v);
      },
      x0, x);
}

double map_canonical_solution(const EquivalenceMap& map, int k, double x) {
  if (k < 0 || k > map.n - 1)
    throw std::invalid_argument("map_canonical_solution: k must lie in [0, n-1]");
  if (!map.u.interval().contains(x))
    throw numeval::DomainError("map_canonical_solution: x outside interval");
  double hx = k == 0 ? 1.0 : std::pow(map.h(x), k);
  return std::pow(map.u(x), map.n - 1) * hx / map.lambda;
}

}  // namespace maxsym::xform
