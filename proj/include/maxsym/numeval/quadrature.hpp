#pragma once

#include <functional>
#include <stdexcept>

#include "maxsym/numeval/closed_form.hpp"

namespace maxsym::numeval {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultQuadratureTol = 1e-10;
inline constexpr int kDefaultQuadratureDepth = 40;

// Adaptive Simpson estimate of the integral of f from a to b (b < a allowed).
// The error target is tol * (1 + |integral|). Throws QuadratureError when the
// depth cap is reached without meeting it.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = kDefaultQuadratureTol, int max_depth = kDefaultQuadratureDepth);

// Integral of f from x0 to x; both ends must lie in f's interval.
double quadrature(const ClosedFormFn& f, double x0, double x, double tol = kDefaultQuadratureTol);

}  // namespace maxsym::numeval
