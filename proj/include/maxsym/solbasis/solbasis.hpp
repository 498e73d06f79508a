#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "maxsym/diffalg/diffpoly.hpp"
#include "maxsym/itergen/linear_ode.hpp"
#include "maxsym/numeval/closed_form.hpp"

namespace maxsym::solbasis {

using numeval::ClosedFormFn;
using numeval::Interval;

enum class Provenance { from_u, from_uv, ermakov, from_r };

std::string_view to_string(Provenance p);

// n solutions of an order-n equation with derivative oracles up to order n.
// Construction checks the Wronskian is nonzero at three interior points.
class SolutionBasis {
 public:
  SolutionBasis(int order, std::vector<ClosedFormFn> entries, Provenance provenance,
                Interval interval, double anchor);

  int order() const { return order_; }
  const std::vector<ClosedFormFn>& entries() const { return entries_; }
  const ClosedFormFn& entry(int k) const { return entries_.at(static_cast<std::size_t>(k)); }
  Provenance provenance() const { return provenance_; }
  const Interval& interval() const { return interval_; }
  double anchor() const { return anchor_; }

 private:
  int order_;
  std::vector<ClosedFormFn> entries_;
  Provenance provenance_;
  Interval interval_;
  double anchor_;
};

// Throws numeval::DomainError when f has a zero or changes sign on its
// interval (checked on a 256-point grid).
void require_nonvanishing(const ClosedFormFn& f);

// y_k = u^(n-1) I^k, I = int_{x0}^x dt/u^2, k = 0..n-1. x0 defaults to the
// left end of u's interval.
SolutionBasis basis_from_u(const ClosedFormFn& u, int n, std::optional<double> x0 = std::nullopt);

// y_k = u^(n-1-k) v^k. u and v must solve the same source equation and have
// a constant nonzero Wronskian.
SolutionBasis basis_from_uv(const ClosedFormFn& u, const ClosedFormFn& v, int n);

// Substitutes y = u^(n-1-k) v^k into generate_maxsym(n) and reduces with
// u'' -> -qu, v'' -> -qv and v' -> (W + u'v)/u. Zero for every admissible k.
diffalg::DiffPoly verify_basis_symbolic(int n, int k, int cap = 8);

double wronskian_numeric(const SolutionBasis& basis, double x);
// uv' - u'v
double wronskian_pair(const ClosedFormFn& u, const ClosedFormFn& v, double x);

// y'' + B y' + (4 A(r) + B^2 + 2 B')/4 y = 0, coefficients in r and B.
itergen::LinearOdeForm ermakov_equation();

// y_j = sqrt(r) J^j exp(-1/2 int B), J = int_{x0}^x dt/r, j = 0, 1.
SolutionBasis ermakov_basis(const ClosedFormFn& r, const ClosedFormFn& b,
                            std::optional<double> x0 = std::nullopt);

// y_k = r^((n-1)/2) J^k, k = 0..n-1; same as basis_from_u with u = sqrt(r).
SolutionBasis nth_basis_from_r(const ClosedFormFn& r, int n,
                               std::optional<double> x0 = std::nullopt);

}  // namespace maxsym::solbasis
