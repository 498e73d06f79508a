#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxsym/diffalg/diffpoly.hpp"

namespace maxsym::numeval {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  bool contains(double x) const;
  double width() const { return hi - lo; }
  // count points strictly inside, equally spaced.
  std::vector<double> interior_points(int count) const;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kUnboundedOrder = 1 << 20;

// A real function on an interval with analytic derivatives up to max_order.
// Cheap to copy; the evaluator is shared and immutable.
class ClosedFormFn {
 public:
  using DerivFn = std::function<double(int order, double x)>;

  ClosedFormFn(std::string label, Interval interval, int max_order, DerivFn deriv);

  double operator()(double x) const { return deriv(0, x); }
  // Throws DomainError outside the interval or above max_order.
  double deriv(int order, double x) const;

  const std::string& label() const { return label_; }
  const Interval& interval() const { return interval_; }
  int max_order() const { return max_order_; }

  ClosedFormFn restricted(Interval sub) const;

 private:
  std::string label_;
  Interval interval_;
  int max_order_;
  std::shared_ptr<const DerivFn> deriv_;
};

ClosedFormFn constant(double c, Interval iv);
// exp(alpha x)
ClosedFormFn exponential(double alpha, Interval iv);
ClosedFormFn cosine(double alpha, Interval iv);
ClosedFormFn sine(double alpha, Interval iv);
// c0 + c1 x + c2 x^2 + ...
ClosedFormFn polynomial(std::vector<double> coeffs, Interval iv);
// x^k; negative or fractional k needs a positive interval.
ClosedFormFn power(double k, Interval iv);
// (a z + b)/(c z + d); the pole must lie outside the interval.
ClosedFormFn mobius(double a, double b, double c, double d, Interval iv);
ClosedFormFn scaled(const ClosedFormFn& f, double c);

// A symbol whose first derivative is known symbolically but whose value is
// computed numerically (an integral, a square root, an exponential of an
// integral).
struct AuxiliarySymbol {
  diffalg::Symbol symbol;
  diffalg::DiffPoly derivative;  // must not mention derivatives of aux symbols
  std::function<double(double)> value;
};

// expr evaluated with base symbols bound to closed-form inputs; derivatives
// are D_x^k(expr) with aux derivatives eliminated, computed once up front.
ClosedFormFn compose(std::string label, const diffalg::DiffPoly& expr,
                     std::map<diffalg::Symbol, ClosedFormFn> inputs,
                     std::vector<AuxiliarySymbol> aux, int max_order, Interval iv);

// q = -u''/u as a function with derivatives up to max_order.
ClosedFormFn source_coefficient_from_u(const ClosedFormFn& u, int max_order);
// q = (r'^2 - 2 r r'')/(4 r^2).
ClosedFormFn source_coefficient_from_r(const ClosedFormFn& r, int max_order);

}  // namespace maxsym::numeval
