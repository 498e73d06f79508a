#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "maxsym/diffalg/diffpoly.hpp"

namespace maxsym::diffalg {

// target -> replacement. The replacement never mentions the target or any
// higher derivative of the target's base.
struct RewriteRule {
  Indeterminate target;
  DiffPoly replacement;
};

using RuleTable = std::vector<RewriteRule>;

class RewriteBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonlinearError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws std::invalid_argument when the replacement violates the invariant.
void validate(const RewriteRule& rule);

// Replaces every power target^e by replacement^e, in one pass.
DiffPoly substitute(const DiffPoly& p, const RewriteRule& rule);

// Applies rules until no target occurs. The highest-order target present is
// rewritten first; ties go to the earlier rule.
DiffPoly reduce_fixpoint(const DiffPoly& p, std::span<const RewriteRule> rules,
                         std::size_t max_steps = 100000);

// Rules for base^(m) ... base^(max_order), where m is the seed's target
// order. Each rule is D_x of the previous replacement reduced by the rules
// built so far, so the table is closed under differentiation.
RuleTable build_rule_table(Symbol base, int max_order, const RewriteRule& seed);

// Coefficient of ind in p, where p is linear in the derivatives of ind.base.
// Throws NonlinearError otherwise.
DiffPoly coefficient_of(const DiffPoly& p, Indeterminate ind);

using Bindings = std::map<Indeterminate, double>;

class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The single conversion point from exact coefficients to double. Terms are
// summed in canonical order.
double evaluate(const DiffPoly& p, const Bindings& bindings);

}  // namespace maxsym::diffalg
