#include "maxsym/solbasis/solbasis.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "maxsym/diffalg/rewrite.hpp"
#include "maxsym/itergen/itergen.hpp"
#include "maxsym/numeval/quadrature.hpp"

namespace maxsym::solbasis {

using diffalg::DiffPoly;
using diffalg::Rational;
using diffalg::RewriteRule;
using numeval::AuxiliarySymbol;
using numeval::DomainError;
namespace sym = diffalg::sym;

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::from_u: return "from_u";
    case Provenance::from_uv: return "from_uv";
    case Provenance::ermakov: return "ermakov";
    case Provenance::from_r: return "from_r";
  }
  return "unknown";
}

namespace {

constexpr double kPairTolerance = 1e-8;
constexpr double kIndependenceTolerance = 1e-12;

Eigen::MatrixXd wronskian_matrix(const std::vector<ClosedFormFn>& entries, double x) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      m(j, k) = entries[static_cast<std::size_t>(k)].deriv(static_cast<int>(j), x);
  return m;
}

void require_order(const ClosedFormFn& f, int order, const char* who) {
  if (f.max_order() < order)
    throw DomainError(std::string(who) + ": " + f.label() + " supplies derivatives only to order " +
                      std::to_string(f.max_order()) + ", need " + std::to_string(order));
}

void require_positive(const ClosedFormFn& r) {
  const auto& iv = r.interval();
  for (int i = 0; i <= 256; ++i) {
    double x = iv.lo + iv.width() * i / 256.0;
    if (!(r(x) > 0.0))
      throw DomainError(r.label() + " is not positive at x = " + std::to_string(x));
  }
}

std::function<double(double)> integral_of_inverse_square(const ClosedFormFn& f, double x0) {
  return [f, x0](double x) {
    return numeval::adaptive_simpson(
        [&f](double t) {
          double v = f(t);
          return 1.0 / (v * v);
        },
        x0, x);
  };
}

std::function<double(double)> integral_of_inverse(const ClosedFormFn& f, double x0) {
  return [f, x0](double x) {
    return numeval::adaptive_simpson([&f](double t) { return 1.0 / f(t); }, x0, x);
  };
}

double anchor_or_default(std::optional<double> x0, const Interval& iv) {
  double a = x0.value_or(iv.lo);
  if (!iv.contains(a)) throw DomainError("anchor x0 outside the interval");
  return a;
}

AuxiliarySymbol sqrt_r_symbol(const ClosedFormFn& r) {
  // rho = sqrt(r), rho' = r'/(2 rho)
  return {sym::rho,
          (DiffPoly::var(sym::r, 1) * DiffPoly::var(sym::rho, 0, -1)).scaled(Rational(1, 2)),
          [r](double x) { return std::sqrt(r(x)); }};
}

}  // namespace

SolutionBasis::SolutionBasis(int order, std::vector<ClosedFormFn> entries, Provenance provenance,
                             Interval interval, double anchor)
    : order_(order),
      entries_(std::move(entries)),
      provenance_(provenance),
      interval_(interval),
      anchor_(anchor) {
  if (order_ < 1) throw std::invalid_argument("SolutionBasis: order must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(order_))
    throw std::invalid_argument("SolutionBasis: expected " + std::to_string(order_) + " entries");
  for (double x : interval_.interior_points(3)) {
    // Derivative rows of high-degree entries differ in scale by many orders,
    // so independence is judged on the row- and column-equilibrated matrix.
    Eigen::MatrixXd m = wronskian_matrix(entries_, x);
    if (!m.allFinite())
      throw DomainError("SolutionBasis: non-finite Wronskian entry at x = " + std::to_string(x));
    for (Eigen::Index j = 0; j < m.rows(); ++j)
      if (double norm = m.row(j).norm(); norm > 0.0) m.row(j) /= norm;
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      if (double norm = m.col(k).norm(); norm > 0.0) m.col(k) /= norm;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (!(sv(sv.size() - 1) > kIndependenceTolerance * sv(0)))
      throw DomainError("SolutionBasis: Wronskian vanishes at x = " + std::to_string(x));
  }
}

void require_nonvanishing(const ClosedFormFn& f) {
  const auto& iv = f.interval();
  double first = f(iv.lo);
  for (int i = 0; i <= 256; ++i) {
    double x = iv.lo + iv.width() * i / 256.0;
    double v = f(x);
    if (v == 0.0 || std::signbit(v) != std::signbit(first))
      throw DomainError(f.label() + " vanishes on [" + std::to_string(iv.lo) + ", " +
                        std::to_string(iv.hi) + "]");
  }
}

SolutionBasis basis_from_u(const ClosedFormFn& u, int n, std::optional<double> x0) {
  if (n < 1) throw std::invalid_argument("basis_from_u: order must be >= 1");
  require_order(u, n, "basis_from_u");
  require_nonvanishing(u);
  const Interval iv = u.interval();
  const double anchor = anchor_or_default(x0, iv);
  AuxiliarySymbol integral{sym::I, DiffPoly::var(sym::u, 0, -2),
                           integral_of_inverse_square(u, anchor)};
  std::vector<ClosedFormFn> entries;
  for (int k = 0; k < n; ++k) {
    DiffPoly expr = DiffPoly::var(sym::u).pow(n - 1) * DiffPoly::var(sym::I).pow(k);
    entries.push_back(numeval::compose("u^" + std::to_string(n - 1) + " I^" + std::to_string(k),
                                       expr, {{sym::u, u}}, {integral}, n, iv));
  }
  return {n, std::move(entries), Provenance::from_u, iv, anchor};
}

double wronskian_pair(const ClosedFormFn& u, const ClosedFormFn& v, double x) {
  return u(x) * v.deriv(1, x) - u.deriv(1, x) * v(x);
}

SolutionBasis basis_from_uv(const ClosedFormFn& u, const ClosedFormFn& v, int n) {
  if (n < 1) throw std::invalid_argument("basis_from_uv: order must be >= 1");
  require_order(u, n, "basis_from_uv");
  require_order(v, n, "basis_from_uv");
  const Interval iv{std::max(u.interval().lo, v.interval().lo),
                    std::min(u.interval().hi, v.interval().hi)};
  // v'' + q v = 0 with q = -u''/u, cross-multiplied by u.
  for (double x : iv.interior_points(5)) {
    double lhs = u(x) * v.deriv(2, x);
    double rhs = u.deriv(2, x) * v(x);
    double den = std::abs(lhs) + std::abs(rhs);
    if (den > 0.0 && std::abs(lhs - rhs) / den > kPairTolerance)
      throw DomainError("basis_from_uv: " + v.label() +
                        " does not solve the source equation of " + u.label());
  }
  auto pts = iv.interior_points(3);
  double w0 = wronskian_pair(u, v, pts[0]);
  if (w0 == 0.0) throw DomainError("basis_from_uv: u and v are linearly dependent");
  for (double x : pts)
    if (std::abs(wronskian_pair(u, v, x) - w0) > kPairTolerance * std::abs(w0))
      throw DomainError("basis_from_uv: Wronskian uv' - u'v is not constant");

  std::vector<ClosedFormFn> entries;
  for (int k = 0; k < n; ++k) {
    DiffPoly expr = DiffPoly::var(sym::u).pow(n - 1 - k) * DiffPoly::var(sym::v).pow(k);
    entries.push_back(numeval::compose(
        "u^" + std::to_string(n - 1 - k) + " v^" + std::to_string(k), expr,
        {{sym::u, u.restricted(iv)}, {sym::v, v.restricted(iv)}}, {}, n, iv));
  }
  return {n, std::move(entries), Provenance::from_uv, iv, iv.lo};
}

DiffPoly verify_basis_symbolic(int n, int k, int cap) {
  if (n < 2 || n > cap)
    throw std::invalid_argument("verify_basis_symbolic: order " + std::to_string(n) +
                                " outside [2, " + std::to_string(cap) + "]");
  if (k < 0 || k > n - 1) throw std::invalid_argument("verify_basis_symbolic: k outside [0, n-1]");
  const DiffPoly u = DiffPoly::var(sym::u);
  const DiffPoly v = DiffPoly::var(sym::v);
  const DiffPoly q = DiffPoly::var(sym::q);

  auto ode = itergen::generate_maxsym(n);
  DiffPoly y = u.pow(n - 1 - k) * v.pow(k);
  std::vector<DiffPoly> derivs{y};
  for (int j = 1; j <= n; ++j) derivs.push_back(diffalg::total_derivative(derivs.back()));
  DiffPoly substituted;
  for (int j = 0; j <= n; ++j) substituted += ode.coeff(j) * derivs[static_cast<std::size_t>(n - j)];

  auto rules = itergen::u_rules(n);
  auto v_rules = diffalg::build_rule_table(sym::v, n, RewriteRule{{sym::v, 2}, -(q * v)});
  rules.insert(rules.end(), v_rules.begin(), v_rules.end());
  rules.push_back(RewriteRule{
      {sym::v, 1}, (DiffPoly::var(sym::W) + DiffPoly::var(sym::u, 1) * v) * u.pow(-1)});
  return diffalg::reduce_fixpoint(substituted, rules);
}

double wronskian_numeric(const SolutionBasis& basis, double x) {
  return wronskian_matrix(basis.entries(), x).partialPivLu().determinant();
}

itergen::LinearOdeForm ermakov_equation() {
  const DiffPoly b = DiffPoly::var(sym::B);
  DiffPoly c2 = itergen::script_a(sym::r) + (b * b).scaled(Rational(1, 4)) +
                DiffPoly::var(sym::B, 1).scaled(Rational(1, 2));
  return {2, {DiffPoly(1), b, c2}, itergen::VariableSet::general};
}

SolutionBasis ermakov_basis(const ClosedFormFn& r, const ClosedFormFn& b, std::optional<double> x0) {
  require_order(r, 2, "ermakov_basis");
  require_order(b, 1, "ermakov_basis");
  const Interval iv{std::max(r.interval().lo, b.interval().lo),
                    std::min(r.interval().hi, b.interval().hi)};
  const ClosedFormFn rr = r.restricted(iv);
  const ClosedFormFn bb = b.restricted(iv);
  require_positive(rr);
  const double anchor = anchor_or_default(x0, iv);

  AuxiliarySymbol j_sym{sym::J, DiffPoly::var(sym::r, 0, -1), integral_of_inverse(rr, anchor)};
  AuxiliarySymbol e_sym{
      sym::E, (DiffPoly::var(sym::B) * DiffPoly::var(sym::E)).scaled(Rational(-1, 2)),
      [bb, anchor](double x) {
        return std::exp(-0.5 * numeval::adaptive_simpson([&bb](double t) { return bb(t); }, anchor, x));
      }};
  std::vector<ClosedFormFn> entries;
  for (int j = 0; j < 2; ++j) {
    DiffPoly expr = DiffPoly::var(sym::rho) * DiffPoly::var(sym::J).pow(j) * DiffPoly::var(sym::E);
    entries.push_back(numeval::compose("sqrt(r) J^" + std::to_string(j) + " E", expr,
                                       {{sym::r, rr}, {sym::B, bb}},
                                       {sqrt_r_symbol(rr), j_sym, e_sym}, 2, iv));
  }
  return {2, std::move(entries), Provenance::ermakov, iv, anchor};
}

SolutionBasis nth_basis_from_r(const ClosedFormFn& r, int n, std::optional<double> x0) {
  if (n < 1) throw std::invalid_argument("nth_basis_from_r: order must be >= 1");
  require_order(r, n, "nth_basis_from_r");
  require_positive(r);
  const Interval iv = r.interval();
  const double anchor = anchor_or_default(x0, iv);
  AuxiliarySymbol j_sym{sym::J, DiffPoly::var(sym::r, 0, -1), integral_of_inverse(r, anchor)};
  std::vector<ClosedFormFn> entries;
  for (int k = 0; k < n; ++k) {
    DiffPoly expr = DiffPoly::var(sym::rho).pow(n - 1) * DiffPoly::var(sym::J).pow(k);
    entries.push_back(numeval::compose("r^((n-1)/2) J^" + std::to_string(k), expr, {{sym::r, r}},
                                       {sqrt_r_symbol(r), j_sym}, n, iv));
  }
  return {n, std::move(entries), Provenance::from_r, iv, anchor};
}

}  // namespace maxsym::solbasis
