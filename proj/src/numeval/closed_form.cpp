#include "maxsym/numeval/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "maxsym/diffalg/rewrite.hpp"
#include "maxsym/itergen/itergen.hpp"

namespace maxsym::numeval {

using diffalg::DiffPoly;
using diffalg::Symbol;

namespace {

constexpr double kSlack = 1e-12;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

bool Interval::contains(double x) const {
  double pad = kSlack * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  return x >= lo - pad && x <= hi + pad;
}

std::vector<double> Interval::interior_points(int count) const {
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) pts.push_back(lo + width() * i / (count + 1));
  return pts;
}

ClosedFormFn::ClosedFormFn(std::string label, Interval interval, int max_order, DerivFn deriv)
    : label_(std::move(label)),
      interval_(interval),
      max_order_(max_order),
      deriv_(std::make_shared<const DerivFn>(std::move(deriv))) {
  if (!(interval_.lo < interval_.hi))
    throw DomainError("empty interval [" + fmt(interval_.lo) + ", " + fmt(interval_.hi) + "]");
}

double ClosedFormFn::deriv(int order, double x) const {
  if (order < 0 || order > max_order_)
    throw DomainError(label_ + ": derivative order " + std::to_string(order) +
                      " exceeds supplied order " + std::to_string(max_order_));
  if (!interval_.contains(x))
    throw DomainError(label_ + ": x = " + fmt(x) + " outside [" + fmt(interval_.lo) + ", " +
                      fmt(interval_.hi) + "]");
  return (*deriv_)(order, x);
}

ClosedFormFn ClosedFormFn::restricted(Interval sub) const {
  if (!interval_.contains(sub.lo) || !interval_.contains(sub.hi))
    throw DomainError(label_ + ": restriction leaves the interval");
  auto inner = deriv_;
  return ClosedFormFn(label_, sub, max_order_, [inner](int k, double x) { return (*inner)(k, x); });
}

ClosedFormFn constant(double c, Interval iv) {
  return ClosedFormFn("const:" + fmt(c), iv, kUnboundedOrder,
                      [c](int k, double) { return k == 0 ? c : 0.0; });
}

ClosedFormFn exponential(double alpha, Interval iv) {
  return ClosedFormFn("exp:" + fmt(alpha), iv, kUnboundedOrder, [alpha](int k, double x) {
    return std::pow(alpha, k) * std::exp(alpha * x);
  });
}

ClosedFormFn cosine(double alpha, Interval iv) {
  // d^k cos(a x) = a^k cos(a x + k pi/2)
  return ClosedFormFn("cos:" + fmt(alpha), iv, kUnboundedOrder, [alpha](int k, double x) {
    double ax = alpha * x;
    double v = 0.0;
    switch (k % 4) {
      case 0: v = std::cos(ax); break;
      case 1: v = -std::sin(ax); break;
      case 2: v = -std::cos(ax); break;
      default: v = std::sin(ax); break;
    }
    return std::pow(alpha, k) * v;
  });
}

ClosedFormFn sine(double alpha, Interval iv) {
  return ClosedFormFn("sin:" + fmt(alpha), iv, kUnboundedOrder, [alpha](int k, double x) {
    double ax = alpha * x;
    double v = 0.0;
    switch (k % 4) {
      case 0: v = std::sin(ax); break;
      case 1: v = std::cos(ax); break;
      case 2: v = -std::sin(ax); break;
      default: v = -std::cos(ax); break;
    }
    return std::pow(alpha, k) * v;
  });
}

ClosedFormFn polynomial(std::vector<double> coeffs, Interval iv) {
  std::string label = "poly:";
  for (std::size_t i = 0; i < coeffs.size(); ++i) label += (i ? "," : "") + fmt(coeffs[i]);
  return ClosedFormFn(label, iv, kUnboundedOrder, [c = std::move(coeffs)](int k, double x) {
    // Horner on the k-th derivative's coefficients.
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > static_cast<std::size_t>(k);) {
      double falling = 1.0;
      for (int j = 0; j < k; ++j) falling *= static_cast<double>(i - static_cast<std::size_t>(j));
      acc = acc * x + c[i] * falling;
    }
    return acc;
  });
}

ClosedFormFn power(double k, Interval iv) {
  bool integral = std::floor(k) == k;
  if ((!integral || k < 0) && iv.lo <= 0.0)
    throw DomainError("pow:" + fmt(k) + " needs a positive interval");
  return ClosedFormFn("pow:" + fmt(k), iv, kUnboundedOrder, [k, integral](int order, double x) {
    double falling = 1.0;
    for (int j = 0; j < order; ++j) falling *= (k - j);
    if (falling == 0.0) return 0.0;
    double e = k - order;
    if (integral && e >= 0) return falling * std::pow(x, static_cast<int>(e));
    return falling * std::pow(x, e);
  });
}

ClosedFormFn mobius(double a, double b, double c, double d, Interval iv) {
  double det = a * d - b * c;
  if (det == 0.0) throw DomainError("degenerate Mobius map (ad - bc = 0)");
  if (c != 0.0) {
    double pole = -d / c;
    if (iv.contains(pole)) throw DomainError("Mobius pole inside the interval");
  }
  return ClosedFormFn("mobius", iv, kUnboundedOrder, [=](int k, double z) {
    double den = c * z + d;
    if (k == 0) return (a * z + b) / den;
    // d^k/dz^k = (-1)^(k+1) k! det c^(k-1) / den^(k+1)
    double fact = 1.0;
    for (int j = 2; j <= k; ++j) fact *= j;
    double sign = (k % 2 == 1) ? 1.0 : -1.0;
    return sign * fact * det * std::pow(c, k - 1) / std::pow(den, k + 1);
  });
}

ClosedFormFn scaled(const ClosedFormFn& f, double c) {
  return ClosedFormFn(fmt(c) + "*" + f.label(), f.interval(), f.max_order(),
                      [f, c](int k, double x) { return c * f.deriv(k, x); });
}

ClosedFormFn compose(std::string label, const DiffPoly& expr,
                     std::map<Symbol, ClosedFormFn> inputs, std::vector<AuxiliarySymbol> aux,
                     int max_order, Interval iv) {
  diffalg::RuleTable first_order;
  for (const auto& a : aux) {
    diffalg::RewriteRule rule{{a.symbol, 1}, a.derivative};
    diffalg::validate(rule);
    for (const auto& other : aux)
      if (a.derivative.max_order(other.symbol) > 0)
        throw std::invalid_argument("aux derivative of " + a.symbol.name() +
                                    " mentions a derivative of " + other.symbol.name());
    first_order.push_back(std::move(rule));
  }
  for (auto base : expr.bases()) {
    bool known = inputs.contains(base);
    for (const auto& a : aux) known = known || a.symbol == base;
    if (!known) throw std::invalid_argument(label + ": symbol " + base.name() + " is unbound");
  }

  auto derivs = std::make_shared<std::vector<DiffPoly>>();
  derivs->push_back(expr);
  for (int k = 1; k <= max_order; ++k)
    derivs->push_back(
        diffalg::reduce_fixpoint(diffalg::total_derivative(derivs->back()), first_order));

  auto shared_inputs = std::make_shared<const std::map<Symbol, ClosedFormFn>>(std::move(inputs));
  auto shared_aux = std::make_shared<const std::vector<AuxiliarySymbol>>(std::move(aux));
  return ClosedFormFn(std::move(label), iv, max_order,
                      [derivs, shared_inputs, shared_aux](int k, double x) {
                        const DiffPoly& p = (*derivs)[static_cast<std::size_t>(k)];
                        diffalg::Bindings bindings;
                        for (const auto& ind : p.indeterminates()) {
                          if (auto it = shared_inputs->find(ind.base); it != shared_inputs->end()) {
                            bindings[ind] = it->second.deriv(ind.order, x);
                            continue;
                          }
                          for (const auto& a : *shared_aux)
                            if (a.symbol == ind.base) bindings[ind] = a.value(x);
                        }
                        return diffalg::evaluate(p, bindings);
                      });
}

ClosedFormFn source_coefficient_from_u(const ClosedFormFn& u, int max_order) {
  namespace sym = diffalg::sym;
  DiffPoly q = -(DiffPoly::var(sym::u, 2) * DiffPoly::var(sym::u, 0, -1));
  return compose("-u''/u [" + u.label() + "]", q, {{sym::u, u}}, {}, max_order, u.interval());
}

ClosedFormFn source_coefficient_from_r(const ClosedFormFn& r, int max_order) {
  namespace sym = diffalg::sym;
  return compose("A(r) [" + r.label() + "]", itergen::script_a(sym::r), {{sym::r, r}}, {},
                 max_order, r.interval());
}

}  // namespace maxsym::numeval
