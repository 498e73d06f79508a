#include <cmath>
#include <string>

#include "maxsym/diffalg/rewrite.hpp"

namespace maxsym::diffalg {

double evaluate(const DiffPoly& p, const Bindings& bindings) {
  double sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double term = c.get_d();
    for (const auto& [ind, e] : m.factors()) {
      auto it = bindings.find(ind);
      if (it == bindings.end())
        throw EvaluationError("evaluate: no binding for " + ind.base.name() + "^(" +
                              std::to_string(ind.order) + ")");
      if (e < 0 && it->second == 0.0)
        throw EvaluationError("evaluate: " + ind.base.name() + "^(" + std::to_string(ind.order) +
                              ") is bound to 0 but occurs with a negative exponent");
      term *= std::pow(it->second, e);
    }
    sum += term;
  }
  return sum;
}

}  // namespace maxsym::diffalg
