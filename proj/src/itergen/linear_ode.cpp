#include "maxsym/itergen/linear_ode.hpp"

#include <stdexcept>

#include "maxsym/diffalg/rewrite.hpp"
#include "maxsym/diffalg/serialize.hpp"

namespace maxsym::itergen {

using diffalg::Indeterminate;
using diffalg::Monomial;
using diffalg::Rational;
namespace sym = diffalg::sym;

std::string_view to_string(VariableSet v) {
  switch (v) {
    case VariableSet::r_s: return "r_s";
    case VariableSet::r_only: return "r";
    case VariableSet::u_only: return "u";
    case VariableSet::q_only: return "q";
    case VariableSet::general: return "general";
  }
  return "general";
}

VariableSet variable_set_from_string(std::string_view s) {
  for (auto v : {VariableSet::r_s, VariableSet::r_only, VariableSet::u_only, VariableSet::q_only,
                 VariableSet::general})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown variable set '" + std::string(s) + "'");
}

namespace {

bool allowed(VariableSet v, diffalg::Symbol base) {
  switch (v) {
    case VariableSet::r_s: return base == sym::r || base == sym::s;
    case VariableSet::r_only: return base == sym::r;
    case VariableSet::u_only: return base == sym::u;
    case VariableSet::q_only: return base == sym::q;
    case VariableSet::general: return base != sym::y;
  }
  return false;
}

}  // namespace

LinearOdeForm::LinearOdeForm(int order, std::vector<DiffPoly> coeffs, VariableSet variables)
    : order_(order), coeffs_(std::move(coeffs)), variables_(variables) {
  if (order_ < 0) throw std::invalid_argument("negative ODE order");
  if (coeffs_.size() != static_cast<std::size_t>(order_) + 1)
    throw std::invalid_argument("LinearOdeForm of order " + std::to_string(order_) + " needs " +
                                std::to_string(order_ + 1) + " coefficients, got " +
                                std::to_string(coeffs_.size()));
  for (const auto& c : coeffs_)
    for (auto base : c.bases())
      if (!allowed(variables_, base))
        throw std::invalid_argument("coefficient mentions '" + base.name() +
                                    "' outside variable set " + std::string(to_string(variables_)));
}

LinearOdeForm LinearOdeForm::from_diffpoly(const DiffPoly& p, int order, VariableSet variables) {
  if (p.max_order(sym::y) > order)
    throw std::invalid_argument("polynomial has a derivative of y above order " +
                                std::to_string(order));
  std::vector<DiffPoly> coeffs;
  DiffPoly rebuilt;
  for (int j = 0; j <= order; ++j) {
    Indeterminate yk{sym::y, order - j};
    coeffs.push_back(diffalg::coefficient_of(p, yk));
    rebuilt += coeffs.back() * DiffPoly(yk);
  }
  if (rebuilt != p) throw std::invalid_argument("polynomial is not linear homogeneous in y");
  return {order, std::move(coeffs), variables};
}

bool LinearOdeForm::is_normal() const {
  if (coeffs_.front() != DiffPoly(1)) return false;
  return order_ < 1 || coeffs_[1].is_zero();
}

DiffPoly LinearOdeForm::to_diffpoly() const {
  DiffPoly out;
  for (int j = 0; j <= order_; ++j) out += coeff(j) * DiffPoly::var(sym::y, order_ - j);
  return out;
}

namespace {

std::vector<std::pair<Monomial, Rational>> equation_terms(const LinearOdeForm& ode) {
  std::vector<std::pair<Monomial, Rational>> terms;
  for (int j = 0; j <= ode.order(); ++j) {
    Monomial yk(Indeterminate{sym::y, ode.order() - j});
    for (const auto& [m, c] : ode.coeff(j).terms()) terms.emplace_back(m * yk, c);
  }
  return terms;
}

}  // namespace

std::string to_text(const LinearOdeForm& ode) {
  return diffalg::to_text(equation_terms(ode)) + " = 0";
}

std::string to_latex(const LinearOdeForm& ode) {
  return diffalg::to_latex(equation_terms(ode)) + " = 0";
}

nlohmann::json to_json(const LinearOdeForm& ode) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : ode.coeffs()) coeffs.push_back(diffalg::to_json(c));
  return {{"order", ode.order()},
          {"variables", std::string(to_string(ode.variables()))},
          {"coefficients", std::move(coeffs)}};
}

LinearOdeForm ode_from_json(const nlohmann::json& j) {
  try {
    std::vector<DiffPoly> coeffs;
    for (const auto& c : j.at("coefficients")) coeffs.push_back(diffalg::from_json(c));
    VariableSet vars = j.contains("variables")
                           ? variable_set_from_string(j.at("variables").get<std::string>())
                           : VariableSet::general;
    return {j.at("order").get<int>(), std::move(coeffs), vars};
  } catch (const nlohmann::json::exception& e) {
    throw diffalg::ParseError(std::string("malformed LinearOdeForm JSON: ") + e.what());
  }
}

}  // namespace maxsym::itergen
