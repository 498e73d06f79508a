#include "maxsym/diffalg/serialize.hpp"

#include <cctype>
#include <string>

namespace maxsym::diffalg {

std::string rational_text(const Rational& value) {
  Rational c = value;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid(num) || !valid(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class numerator(n, 10);
  mpz_class denominator(std::string(den), 10);
  if (denominator == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational out(numerator, denominator);
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------- text

std::string to_text(Indeterminate ind, int exp) {
  std::string out = ind.base.name();
  if (ind.order >= 1 && ind.order <= 3)
    out.append(static_cast<std::size_t>(ind.order), '\'');
  else if (ind.order > 3)
    out += "^(" + std::to_string(ind.order) + ")";
  if (exp != 1) out += "^" + std::to_string(exp);
  return out;
}

namespace {

template <typename Terms, typename FactorFn, typename CoeffFn>
std::string render(const Terms& terms, FactorFn factor, CoeffFn coeff, std::string_view times) {
  if (std::empty(terms)) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    bool need_sep = false;
    if (m.is_one() || mag != 1) {
      out += coeff(mag);
      need_sep = true;
    }
    for (const auto& [ind, e] : m.factors()) {
      if (need_sep) out += times;
      out += factor(ind, e);
      need_sep = true;
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DiffPoly parse() {
    DiffPoly out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char ch) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  bool accept(char ch) {
    if (!peek(ch)) return false;
    ++pos_;
    return true;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int() {
    auto d = digits();
    if (d.size() > 6) fail("integer too large");
    return std::stoi(d);
  }

  DiffPoly expr() {
    DiffPoly out;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    DiffPoly t = term();
    out = negate ? -t : t;
    for (;;) {
      if (accept('+'))
        out += term();
      else if (accept('-'))
        out -= term();
      else
        return out;
    }
  }

  DiffPoly term() {
    DiffPoly out = power();
    for (;;) {
      if (accept('*')) {
        out = mul(out, power());
      } else if (accept('/')) {
        DiffPoly divisor = power();
        if (!divisor.is_monomial()) fail("division by a non-monomial");
        out = mul(out, divisor.pow(-1));
      } else {
        return out;
      }
    }
  }

  int exponent() {
    bool paren = accept('(');
    bool neg = accept('-');
    int e = small_int();
    if (paren) expect(')');
    return neg ? -e : e;
  }

  DiffPoly power() {
    DiffPoly base = primary();
    while (accept('^')) {
      int e = exponent();
      if (e < 0 && !base.is_monomial()) fail("negative power of a non-monomial");
      base = base.pow(e);
    }
    return base;
  }

  DiffPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      DiffPoly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return DiffPoly(Rational(mpz_class(digits(), 10)));
    if (std::isalpha(static_cast<unsigned char>(ch))) return indeterminate();
    fail("unexpected character");
  }

  DiffPoly indeterminate() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto base = find_symbol(name);
    if (!base) {
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    int order = 0;
    while (pos_ < text_.size() && text_[pos_] == '\'') {
      ++order;
      ++pos_;
    }
    // ^(k) directly after a bare name is a derivative order.
    if (order == 0 && text_.substr(pos_, 2) == "^(") {
      std::size_t save = pos_;
      pos_ += 2;
      skip_ws();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        order = small_int();
        expect(')');
      } else {
        pos_ = save;
      }
    }
    return DiffPoly::var(*base, order);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string latex_name(const std::string& name) {
  if (name == "rho") return "\\rho";
  return name;
}

}  // namespace

std::string to_text(const DiffPoly& p) {
  return render(
      p.terms(), [](Indeterminate ind, int e) { return to_text(ind, e); },
      [](const Rational& c) { return rational_text(c); }, "*");
}

std::string to_text(std::span<const std::pair<Monomial, Rational>> terms) {
  return render(
      terms, [](Indeterminate ind, int e) { return to_text(ind, e); },
      [](const Rational& c) { return rational_text(c); }, "*");
}

DiffPoly parse_text(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------- json

nlohmann::json to_json(const DiffPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& [ind, e] : m.factors())
      factors.push_back({{"base", ind.base.name()}, {"order", ind.order}, {"exp", e}});
    terms.push_back({{"coeff", rational_text(c)}, {"factors", std::move(factors)}});
  }
  return {{"terms", std::move(terms)}};
}

DiffPoly from_json(const nlohmann::json& j) {
  try {
    DiffPoly::TermMap out;
    for (const auto& t : j.at("terms")) {
      Rational c = parse_rational(t.at("coeff").get<std::string>());
      std::vector<Monomial::Factor> factors;
      for (const auto& f : t.at("factors")) {
        int order = f.at("order").get<int>();
        if (order < 0) throw ParseError("negative derivative order in JSON factor");
        factors.emplace_back(Indeterminate{symbol(f.at("base").get<std::string>()), order},
                             f.at("exp").get<int>());
      }
      DiffPoly::accumulate(out, Monomial(std::move(factors)), c);
    }
    return DiffPoly::from_terms(std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed DiffPoly JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------- latex

std::string to_latex(Indeterminate ind, int exp) {
  std::string out = latex_name(ind.base.name());
  if (ind.order == 1 || ind.order == 2) {
    out.append(static_cast<std::size_t>(ind.order), '\'');
  } else if (ind.order > 2) {
    out += "^{(" + std::to_string(ind.order) + ")}";
    if (exp != 1) out = "\\left(" + out + "\\right)";
  }
  if (exp != 1) out += "^{" + std::to_string(exp) + "}";
  return out;
}

namespace {

std::string latex_coeff(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

}  // namespace

std::string to_latex(const DiffPoly& p) {
  return render(
      p.terms(), [](Indeterminate ind, int e) { return to_latex(ind, e); }, latex_coeff, " ");
}

std::string to_latex(std::span<const std::pair<Monomial, Rational>> terms) {
  return render(
      terms, [](Indeterminate ind, int e) { return to_latex(ind, e); }, latex_coeff, " ");
}

}  // namespace maxsym::diffalg
