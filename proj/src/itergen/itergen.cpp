#include "maxsym/itergen/itergen.hpp"

#include <string>

namespace maxsym::itergen {

using diffalg::Indeterminate;
using diffalg::Rational;
using diffalg::RewriteRule;
using diffalg::total_derivative;
namespace sym = diffalg::sym;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

DiffPoly var(diffalg::Symbol s, int order = 0) { return DiffPoly::var(s, order); }

// Reduces every coefficient and checks that only q survives.
LinearOdeForm reduce_to_q(const LinearOdeForm& ode, const RuleTable& rules,
                          const char* eliminated) {
  std::vector<DiffPoly> coeffs;
  coeffs.reserve(ode.coeffs().size());
  for (const auto& c : ode.coeffs()) {
    coeffs.push_back(diffalg::reduce_fixpoint(c, rules));
    for (auto base : coeffs.back().bases())
      if (base != sym::q)
        throw ConsistencyError(std::string("residual ") + base.name() + " after eliminating " +
                               eliminated + " at order " + std::to_string(ode.order()));
  }
  return {ode.order(), std::move(coeffs), VariableSet::q_only};
}

void check_normal(const LinearOdeForm& ode, const char* who) {
  if (!ode.is_normal())
    throw ConsistencyError(std::string(who) + ": result is not in normal form at order " +
                           std::to_string(ode.order()));
}

}  // namespace

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

DiffPoly psi(const DiffPoly& e, const DiffPoly& r, const DiffPoly& s) {
  return r * total_derivative(e) + s * e;
}

DiffPoly psi_power(int n, const DiffPoly& r, const DiffPoly& s) {
  require(n >= 0, "psi_power: negative order " + std::to_string(n));
  DiffPoly out = var(sym::y);
  for (int i = 0; i < n; ++i) out = psi(out, r, s);
  return out;
}

DiffPoly psi_power(int n, SMode mode) {
  require(n >= 0, "psi_power: negative order " + std::to_string(n));
  return psi_power(n, var(sym::r), mode == SMode::generic ? var(sym::s) : normal_s(n));
}

DiffPoly normal_s(int n) { return var(sym::r, 1).scaled(Rational(-(n - 1), 2)); }

DiffPoly script_a(diffalg::Symbol base) {
  DiffPoly xi = DiffPoly::var(base);
  DiffPoly num = DiffPoly::var(base, 1).pow(2) - DiffPoly::var(base, 2) * xi.scaled(2);
  return num * xi.pow(-2).scaled(Rational(1, 4));
}

std::vector<DiffPoly> extract_K(int n) {
  require(n >= 1, "extract_K: order must be >= 1");
  DiffPoly p = psi_power(n, SMode::generic);
  std::vector<DiffPoly> out;
  for (int j = 0; j <= n; ++j) out.push_back(diffalg::coefficient_of(p, {sym::y, n - j}));
  return out;
}

std::vector<DiffPoly> k_recurrence(int n) {
  require(n >= 1, "k_recurrence: order must be >= 1");
  const DiffPoly r = var(sym::r);
  const DiffPoly s = var(sym::s);
  std::vector<DiffPoly> row{DiffPoly(1)};  // K_0^0
  for (int m = 1; m <= n; ++m) {
    std::vector<DiffPoly> next(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
      if (j <= m - 1) next[j] += r * row[j];
      if (j >= 1) next[j] += psi(row[j - 1], r, s);
    }
    row = std::move(next);
  }
  return row;
}

std::vector<DiffPoly> k_recurrence_sum(int n) {
  require(n >= 1, "k_recurrence_sum: order must be >= 1");
  const DiffPoly r = var(sym::r);
  const DiffPoly s = var(sym::s);
  std::vector<DiffPoly> r_pow{DiffPoly(1)};
  for (int k = 1; k <= n; ++k) r_pow.push_back(r_pow.back() * r);

  // column[m] = K_m^j for the current j, m = 0..n.
  std::vector<DiffPoly> column(r_pow);  // j = 0: K_m^0 = r^m
  std::vector<DiffPoly> out{column[n]};
  for (int j = 1; j <= n; ++j) {
    std::vector<DiffPoly> psi_prev(static_cast<std::size_t>(n) + 1);
    for (int k = j; k <= n; ++k) psi_prev[k] = psi(column[k - 1], r, s);
    std::vector<DiffPoly> next(static_cast<std::size_t>(n) + 1);
    for (int m = j; m <= n; ++m)
      for (int k = j; k <= m; ++k) next[m] += r_pow[m - k] * psi_prev[k];
    column = std::move(next);
    out.push_back(column[n]);
  }
  return out;
}

std::pair<DiffPoly, DiffPoly> closed_form_K12(int n) {
  require(n >= 2, "closed_form_K12: order must be >= 2");
  const DiffPoly r = var(sym::r);
  const DiffPoly s = var(sym::s);
  const DiffPoly r1 = var(sym::r, 1);
  const DiffPoly r2 = var(sym::r, 2);
  DiffPoly k1 = r.pow(n - 1) * (s.scaled(n) + r1.scaled(binomial(n, 2)));
  DiffPoly inner = s * r1 * DiffPoly(3) + r * r2 + r1.pow(2).scaled(Rational(3 * n - 5, 4));
  DiffPoly k2 = r.pow(n - 2) * (psi(s, r, s).scaled(binomial(n, 2)) + inner.scaled(binomial(n, 3)));
  return {k1, k2};
}

RuleTable r_rules(int max_order) {
  const DiffPoly r = var(sym::r);
  DiffPoly seed = var(sym::r, 1).pow(2) * r.pow(-1).scaled(Rational(1, 2)) -
                  var(sym::q) * r.scaled(2);
  return diffalg::build_rule_table(sym::r, max_order, RewriteRule{{sym::r, 2}, seed});
}

RuleTable u_rules(int max_order) {
  return diffalg::build_rule_table(sym::u, max_order,
                                   RewriteRule{{sym::u, 2}, -(var(sym::q) * var(sym::u))});
}

LinearOdeForm phi_n(int n) {
  require(n >= 2, "phi_n: order must be >= 2");
  DiffPoly p = psi_power(n, SMode::normal) * var(sym::r).pow(-n);
  auto ode = LinearOdeForm::from_diffpoly(p, n, VariableSet::r_only);
  check_normal(ode, "phi_n");
  return ode;
}

LinearOdeForm phi_n_r(int n) {
  require(n >= 2, "phi_n_r: order must be >= 2");
  return reduce_to_q(phi_n(n), r_rules(n), "r");
}

LinearOdeForm theta_n_u(int n) {
  require(n >= 2, "theta_n_u: order must be >= 2");
  const DiffPoly u = var(sym::u);
  DiffPoly r = u * u;
  DiffPoly s = u * var(sym::u, 1).scaled(-(n - 1));
  DiffPoly p = psi_power(n, r, s) * u.pow(-2 * n);
  auto ode = LinearOdeForm::from_diffpoly(p, n, VariableSet::u_only);
  auto out = reduce_to_q(ode, u_rules(n), "u");
  check_normal(out, "theta_n_u");
  return out;
}

LinearOdeForm theta_n_u_late_substitution(int n) {
  require(n >= 2, "theta_n_u_late_substitution: order must be >= 2");
  DiffPoly p = psi_power(n, SMode::generic);
  auto s_table = diffalg::build_rule_table(sym::s, n + 1, RewriteRule{{sym::s, 0}, normal_s(n)});
  p = diffalg::reduce_fixpoint(p, s_table);
  const DiffPoly u = var(sym::u);
  auto r_table = diffalg::build_rule_table(sym::r, n + 1, RewriteRule{{sym::r, 0}, u * u});
  p = diffalg::reduce_fixpoint(p, r_table) * u.pow(-2 * n);
  auto ode = LinearOdeForm::from_diffpoly(p, n, VariableSet::u_only);
  auto out = reduce_to_q(ode, u_rules(n + 1), "u");
  check_normal(out, "theta_n_u_late_substitution");
  return out;
}

LinearOdeForm generate_maxsym(int n) { return theta_n_u(n); }

}  // namespace maxsym::itergen
