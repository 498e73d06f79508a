#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "maxsym/diffalg/rewrite.hpp"
#include "maxsym/itergen/linear_ode.hpp"

namespace maxsym::itergen {

using diffalg::RuleTable;

// A generated equation failed a structural check it must satisfy by
// construction (normal form, elimination of r or u).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class SMode {
  generic,  // s is a free symbol
  normal,   // s = -(n-1) r'/2, which kills the y^(n-1) coefficient
};

// Psi[e] = r D_x(e) + s e for arbitrary parameter expressions r, s.
DiffPoly psi(const DiffPoly& e, const DiffPoly& r, const DiffPoly& s);
// Psi^n[y].
DiffPoly psi_power(int n, const DiffPoly& r, const DiffPoly& s);
DiffPoly psi_power(int n, SMode mode);

// -(n-1) r'/2
DiffPoly normal_s(int n);
// (xi'^2 - 2 xi xi'') / (4 xi^2)
DiffPoly script_a(diffalg::Symbol base);

// K_n^j read off Psi^n[y], j = 0..n.
std::vector<DiffPoly> extract_K(int n);
// K_n^j = r K_{n-1}^j + Psi(K_{n-1}^{j-1}).
std::vector<DiffPoly> k_recurrence(int n);
// K_n^j = sum_{k=j}^{n} r^{n-k} Psi(K_{k-1}^{j-1}) for j >= 1, K_n^0 = r^n.
std::vector<DiffPoly> k_recurrence_sum(int n);
// Closed forms of K_n^1 and K_n^2.
std::pair<DiffPoly, DiffPoly> closed_form_K12(int n);

// r'' -> (r'^2 - 4 q r^2)/(2r), closed up to r^(max_order).
RuleTable r_rules(int max_order);
// u'' -> -q u, closed up to u^(max_order).
RuleTable u_rules(int max_order);

// Psi^n[y] / r^n with s in normal form; coefficients in r only.
LinearOdeForm phi_n(int n);
// phi_n with every r^(j), j >= 2, rewritten; coefficients in q only.
LinearOdeForm phi_n_r(int n);
// Psi^n[y] / u^(2n) with r = u^2, s = -(n-1) u u', reduced by u_rules;
// coefficients in q only.
LinearOdeForm theta_n_u(int n);
// Same result, but iterating with free s and r and substituting afterwards.
LinearOdeForm theta_n_u_late_substitution(int n);
// The order-n equation of maximal symmetry in normal form, via theta_n_u.
LinearOdeForm generate_maxsym(int n);

// C(n, k) as an exact rational (0 when k > n).
diffalg::Rational binomial(int n, int k);

}  // namespace maxsym::itergen
