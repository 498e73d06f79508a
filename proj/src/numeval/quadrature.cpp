#include "maxsym/numeval/quadrature.hpp"

#include <cmath>
#include <limits>

namespace maxsym::numeval {

namespace {

struct Simpson {
  const std::function<double(double)>& f;
  int max_depth;

  double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol,
                 int depth) const {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    // Below this the difference is rounding noise.
    double floor = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
    if (std::abs(delta) <= 15.0 * std::max(tol, floor)) return left + right + delta / 15.0;
    if (depth >= max_depth)
      throw QuadratureError("adaptive Simpson did not converge within depth " +
                            std::to_string(max_depth));
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  if (a == b) return 0.0;
  if (b < a) return -adaptive_simpson(f, b, a, tol, max_depth);
  double fa = f(a);
  double fb = f(b);
  double m = 0.5 * (a + b);
  double fm = f(m);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  // Scale the target by a first estimate of the magnitude.
  double target = tol * (1.0 + std::abs(whole));
  double out = Simpson{f, max_depth}.recurse(a, b, fa, fm, fb, whole, target, 0);
  if (!std::isfinite(out)) throw QuadratureError("quadrature produced a non-finite value");
  return out;
}

double quadrature(const ClosedFormFn& f, double x0, double x, double tol) {
  if (!f.interval().contains(x0) || !f.interval().contains(x))
    throw DomainError(f.label() + ": quadrature limits leave the interval");
  return adaptive_simpson([&f](double t) { return f(t); }, x0, x, tol);
}

}  // namespace maxsym::numeval
