#include "maxsym/numeval/residual.hpp"

#include <cmath>

#include "maxsym/diffalg/rewrite.hpp"

namespace maxsym::numeval {

namespace {
constexpr double kDegenerateFloor = 1e-4;
}  // namespace

double residual(const itergen::LinearOdeForm& ode,
                const std::map<diffalg::Symbol, ClosedFormFn>& inputs, const ClosedFormFn& y,
                std::span<const double> points) {
  const int n = ode.order();
  double worst = 0.0;
  for (double x : points) {
    // Normalized by the sum of term magnitudes, floored at a small fraction of
    // sum_j |c_j| * max_k |y^(k)|. Without the floor a solution whose terms all
    // vanish identically (a constant under a constant source) reports pure
    // rounding noise as an O(1) residual.
    double num = 0.0;
    double magnitude = 0.0;
    double coeff_scale = 0.0;
    double y_scale = 0.0;
    for (int k = 0; k <= n; ++k) y_scale = std::max(y_scale, std::abs(y.deriv(k, x)));
    for (int j = 0; j <= n; ++j) {
      const auto& c = ode.coeff(j);
      diffalg::Bindings bindings;
      for (const auto& ind : c.indeterminates()) {
        auto it = inputs.find(ind.base);
        if (it == inputs.end())
          throw DomainError("residual: no input function for coefficient symbol " +
                            ind.base.name());
        bindings[ind] = it->second.deriv(ind.order, x);
      }
      double cj = diffalg::evaluate(c, bindings);
      double term = cj * y.deriv(n - j, x);
      num += term;
      magnitude += std::abs(term);
      coeff_scale += std::abs(cj);
    }
    double den = std::max(magnitude, kDegenerateFloor * coeff_scale * y_scale);
    if (!std::isfinite(num) || !std::isfinite(den))
      throw DomainError("residual: non-finite value at x = " + std::to_string(x));
    if (den == 0.0) continue;
    worst = std::max(worst, std::abs(num) / den);
  }
  return worst;
}

double residual(const itergen::LinearOdeForm& ode, const ClosedFormFn& q, const ClosedFormFn& y,
                std::span<const double> points) {
  return residual(ode, {{diffalg::sym::q, q}}, y, points);
}

namespace {

double central(const ClosedFormFn& f, int order, double x, double h) {
  if (order == 1) return (f(x + h) - f(x - h)) / (2.0 * h);
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace

double fd_check(const ClosedFormFn& f, int order, double x) {
  if (order != 1 && order != 2) throw std::invalid_argument("fd_check supports orders 1 and 2");
  double scale = std::max(1.0, std::abs(x));
  double h = (order == 1 ? 1e-3 : 5e-3) * scale;
  h = std::min(h, 0.25 * f.interval().width());
  if (!f.interval().contains(x - h) || !f.interval().contains(x + h))
    throw DomainError(f.label() + ": finite-difference stencil leaves the interval at x = " +
                      std::to_string(x));
  double coarse = central(f, order, x, h);
  double fine = central(f, order, x, 0.5 * h);
  double extrapolated = (4.0 * fine - coarse) / 3.0;
  return std::abs(extrapolated - f.deriv(order, x));
}

double fd_validate(const ClosedFormFn& f) {
  const auto& iv = f.interval();
  double margin = 0.1 * iv.width();
  Interval inner{iv.lo + margin, iv.hi - margin};
  double worst = 0.0;
  for (double x : inner.interior_points(5))
    for (int order : {1, 2}) {
      if (order > f.max_order()) continue;
      worst = std::max(worst, fd_check(f, order, x) / (1.0 + std::abs(f.deriv(order, x))));
    }
  return worst;
}

}  // namespace maxsym::numeval
