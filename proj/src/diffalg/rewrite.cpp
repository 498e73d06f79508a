#include "maxsym/diffalg/rewrite.hpp"

#include <string>

namespace maxsym::diffalg {

namespace {

std::string describe(Indeterminate ind) {
  return ind.base.name() + "^(" + std::to_string(ind.order) + ")";
}

}  // namespace

void validate(const RewriteRule& rule) {
  for (const auto& ind : rule.replacement.indeterminates()) {
    if (ind.base == rule.target.base && ind.order >= rule.target.order)
      throw std::invalid_argument("rewrite rule for " + describe(rule.target) +
                                  " mentions " + describe(ind) + " in its replacement");
  }
}

DiffPoly substitute(const DiffPoly& p, const RewriteRule& rule) {
  DiffPoly::TermMap out;
  std::map<int, DiffPoly> powers;
  auto power = [&](int e) -> const DiffPoly& {
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, rule.replacement.pow(e)).first;
    return it->second;
  };
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(rule.target);
    if (e == 0) {
      DiffPoly::accumulate(out, m, c);
      continue;
    }
    Monomial rest = m.without(rule.target);
    for (const auto& [rm, rc] : power(e).terms()) DiffPoly::accumulate(out, rest * rm, c * rc);
  }
  return DiffPoly::from_terms(std::move(out));
}

DiffPoly reduce_fixpoint(const DiffPoly& p, std::span<const RewriteRule> rules,
                         std::size_t max_steps) {
  DiffPoly current = p;
  for (std::size_t step = 0;; ++step) {
    auto present = current.indeterminates();
    const RewriteRule* next = nullptr;
    for (const auto& rule : rules) {
      if (!present.contains(rule.target)) continue;
      if (next == nullptr || rule.target.order > next->target.order) next = &rule;
    }
    if (next == nullptr) return current;
    if (step >= max_steps)
      throw RewriteBudgetExceeded("reduce_fixpoint exceeded " + std::to_string(max_steps) +
                                  " rewrite steps; the rule table is not closed");
    current = substitute(current, *next);
  }
}

RuleTable build_rule_table(Symbol base, int max_order, const RewriteRule& seed) {
  if (seed.target.base != base)
    throw std::invalid_argument("seed targets " + describe(seed.target) + ", expected base " +
                                base.name());
  validate(seed);
  RuleTable table;
  if (max_order < seed.target.order) return table;
  table.push_back(seed);
  for (int order = seed.target.order + 1; order <= max_order; ++order) {
    DiffPoly next = reduce_fixpoint(total_derivative(table.back().replacement), table);
    table.push_back({Indeterminate{base, order}, std::move(next)});
  }
  return table;
}

DiffPoly coefficient_of(const DiffPoly& p, Indeterminate ind) {
  DiffPoly::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    int total = 0;
    for (const auto& [f, e] : m.factors()) {
      if (f.base != ind.base) continue;
      if (e < 0)
        throw NonlinearError("coefficient_of: negative power of " + describe(f));
      total += e;
    }
    if (total > 1)
      throw NonlinearError("coefficient_of: polynomial is not linear in " + ind.base.name());
    if (m.exponent(ind) == 1) DiffPoly::accumulate(out, m.without(ind), c);
  }
  return DiffPoly::from_terms(std::move(out));
}

}  // namespace maxsym::diffalg
