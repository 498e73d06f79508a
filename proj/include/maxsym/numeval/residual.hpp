#pragma once

#include <map>
#include <span>

#include "maxsym/itergen/linear_ode.hpp"
#include "maxsym/numeval/closed_form.hpp"

namespace maxsym::numeval {

// max over points of |sum_j c_j y^(n-j)| / sum_j |c_j y^(n-j)|, with the
// denominator floored at 1e-4 * sum_j |c_j| * max_k |y^(k)| so identically
// vanishing terms do not turn rounding noise into a large ratio; 0 when
// everything vanishes. Coefficients are evaluated with every base symbol they
// mention bound to the matching input function.
double residual(const itergen::LinearOdeForm& ode,
                const std::map<diffalg::Symbol, ClosedFormFn>& inputs, const ClosedFormFn& y,
                std::span<const double> points);
// q-only equations.
double residual(const itergen::LinearOdeForm& ode, const ClosedFormFn& q, const ClosedFormFn& y,
                std::span<const double> points);

// |Richardson-extrapolated central difference - f.deriv(order, x)| for
// order 1 or 2. Throws DomainError when the stencil leaves the interval.
double fd_check(const ClosedFormFn& f, int order, double x);

// Largest mixed error |fd - d| / (1 + |d|) over 5 interior probes and orders
// 1 and 2.
double fd_validate(const ClosedFormFn& f);

}  // namespace maxsym::numeval
