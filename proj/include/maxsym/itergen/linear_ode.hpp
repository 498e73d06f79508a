#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "maxsym/diffalg/diffpoly.hpp"

namespace maxsym::itergen {

using diffalg::DiffPoly;

// Which base symbols the coefficients may mention.
enum class VariableSet { r_s, r_only, u_only, q_only, general };

std::string_view to_string(VariableSet v);
VariableSet variable_set_from_string(std::string_view s);

// c_0 y^(n) + c_1 y^(n-1) + ... + c_n y = 0 in the dependent variable y.
class LinearOdeForm {
 public:
  // Throws std::invalid_argument when the coefficient count is not order+1,
  // a coefficient mentions y, or a coefficient leaves the variable set.
  LinearOdeForm(int order, std::vector<DiffPoly> coeffs, VariableSet variables);

  // Splits p = sum_j c_j y^(order-j); p must be linear homogeneous in y.
  static LinearOdeForm from_diffpoly(const DiffPoly& p, int order, VariableSet variables);

  int order() const { return order_; }
  VariableSet variables() const { return variables_; }
  const std::vector<DiffPoly>& coeffs() const { return coeffs_; }
  // Coefficient of y^(order - j).
  const DiffPoly& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  // Coefficient of y^(k).
  const DiffPoly& coeff_of_derivative(int k) const { return coeff(order_ - k); }

  bool is_normal() const;
  DiffPoly to_diffpoly() const;

  bool operator==(const LinearOdeForm&) const = default;

 private:
  int order_;
  std::vector<DiffPoly> coeffs_;
  VariableSet variables_;
};

// "y''' + 4*q*y' + 2*q'*y = 0": grouped by descending derivative of y.
std::string to_text(const LinearOdeForm& ode);
std::string to_latex(const LinearOdeForm& ode);
// {"order":N,"variables":"q","coefficients":[DiffPoly JSON...]}
nlohmann::json to_json(const LinearOdeForm& ode);
LinearOdeForm ode_from_json(const nlohmann::json& j);

}  // namespace maxsym::itergen
