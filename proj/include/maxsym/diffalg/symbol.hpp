#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace maxsym::diffalg {

// A base symbol is identified by its registration rank. Rank fixes the
// ordering of indeterminates (and therefore of printed factors).
class Symbol {
 public:
  constexpr Symbol() = default;
  constexpr explicit Symbol(std::uint16_t rank) : rank_(rank) {}

  constexpr std::uint16_t rank() const { return rank_; }
  const std::string& name() const;
  // Constant symbols have a vanishing total derivative.
  bool is_constant() const;

  auto operator<=>(const Symbol&) const = default;

 private:
  std::uint16_t rank_ = 0;
};

// Registering an existing name returns the existing symbol; the constant flag
// must agree.
Symbol register_symbol(std::string_view name, bool constant = false);
std::optional<Symbol> find_symbol(std::string_view name);
Symbol symbol(std::string_view name);  // throws std::invalid_argument if unknown

// Symbols registered at startup, in rank order.
namespace sym {
inline constexpr Symbol q{0};    // A_2^2, coefficient of the source equation
inline constexpr Symbol r{1};    // source parameter
inline constexpr Symbol s{2};
inline constexpr Symbol u{3};    // source-equation solution, r = u^2
inline constexpr Symbol v{4};    // second source-equation solution
inline constexpr Symbol W{5};    // Wronskian uv' - u'v (constant)
inline constexpr Symbol h{6};
inline constexpr Symbol I{7};    // integral of u^-2
inline constexpr Symbol J{8};    // integral of r^-1
inline constexpr Symbol E{9};    // exp(-1/2 integral B)
inline constexpr Symbol rho{10}; // sqrt(r)
inline constexpr Symbol B{11};
inline constexpr Symbol w{12};
inline constexpr Symbol y{13};
}  // namespace sym

// (base, derivative order); order 0 is the function itself.
struct Indeterminate {
  Symbol base;
  int order = 0;

  constexpr Indeterminate() = default;
  constexpr Indeterminate(Symbol b, int o = 0) : base(b), order(o) {}

  constexpr Indeterminate derivative(int k = 1) const { return {base, order + k}; }
  auto operator<=>(const Indeterminate&) const = default;
};

}  // namespace maxsym::diffalg
