#include "maxsym/diffalg/diffpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxsym::diffalg {

Monomial::Monomial(Indeterminate ind, int exp) {
  if (exp != 0) {
    factors_.emplace_back(ind, exp);
    degree_ = exp;
  }
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [ind, e] : factors) {
    if (!factors_.empty() && factors_.back().first == ind)
      factors_.back().second += e;
    else
      factors_.emplace_back(ind, e);
    if (factors_.back().second == 0) factors_.pop_back();
  }
  for (const auto& f : factors_) degree_ += f.second;
}

int Monomial::exponent(Indeterminate ind) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), ind,
                             [](const Factor& f, const Indeterminate& i) { return f.first < i; });
  return (it != factors_.end() && it->first == ind) ? it->second : 0;
}

int Monomial::degree_in(Symbol base) const {
  int d = 0;
  for (const auto& [ind, e] : factors_)
    if (ind.base == base) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) out.factors_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int e) const {
  if (e == 0) return {};
  Monomial out = *this;
  for (auto& f : out.factors_) f.second *= e;
  out.degree_ *= e;
  return out;
}

Monomial Monomial::without(Indeterminate ind) const {
  Monomial out;
  out.factors_.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (f.first == ind) continue;
    out.factors_.push_back(f);
    out.degree_ += f.second;
  }
  return out;
}

Monomial Monomial::times(Indeterminate ind, int delta) const {
  return *this * Monomial(ind, delta);
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) {
      // The monomial holding the smaller indeterminate has a nonzero exponent
      // where the other has zero.
      return fa[i].first < fb[i].first ? fa[i].second > 0 : fb[i].second < 0;
    }
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  if (i < fa.size()) return fa[i].second > 0;
  if (i < fb.size()) return fb[i].second < 0;
  return false;
}

namespace {

// mpq_class(p, q) leaves the fraction unreduced; GMP arithmetic assumes
// canonical operands, so every coefficient entering a DiffPoly is reduced.
Rational canonical(const Rational& c) {
  Rational out = c;
  out.canonicalize();
  return out;
}

}  // namespace

DiffPoly::DiffPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, canonical(c));
}

DiffPoly::DiffPoly(Indeterminate ind, int exp) { terms_.emplace(Monomial(ind, exp), Rational(1)); }

DiffPoly::DiffPoly(const Rational& c, Monomial m) {
  if (c != 0) terms_.emplace(std::move(m), canonical(c));
}

DiffPoly DiffPoly::from_terms(TermMap terms) {
  DiffPoly out;
  out.terms_ = std::move(terms);
  return out;
}

void DiffPoly::accumulate(TermMap& map, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = map.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) map.erase(it);
  }
}

Rational DiffPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& other) {
  for (const auto& [m, c] : other.terms_) accumulate(terms_, m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& other) {
  for (const auto& [m, c] : other.terms_) accumulate(terms_, m, -c);
  return *this;
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& other) {
  *this = mul(*this, other);
  return *this;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

DiffPoly DiffPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial())
      throw std::domain_error("negative power of a polynomial with " + std::to_string(size()) +
                              " terms");
    const auto& [m, c] = *terms_.begin();
    Rational inv = 1 / c;
    Rational coeff = 1;
    for (int i = 0; i < -e; ++i) coeff *= inv;
    return DiffPoly(coeff, m.pow(e));
  }
  DiffPoly result(1);
  DiffPoly base = *this;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

DiffPoly DiffPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  DiffPoly out = *this;
  const Rational k = canonical(c);
  for (auto& [m, coeff] : out.terms_) coeff *= k;
  return out;
}

DiffPoly DiffPoly::times(const Monomial& m) const {
  DiffPoly out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mono * m, c);
  return out;
}

bool DiffPoly::mentions(Symbol base) const { return max_order(base) >= 0; }

int DiffPoly::max_order(Symbol base) const {
  int best = -1;
  for (const auto& [m, c] : terms_)
    for (const auto& [ind, e] : m.factors())
      if (ind.base == base) best = std::max(best, ind.order);
  return best;
}

std::set<Indeterminate> DiffPoly::indeterminates() const {
  std::set<Indeterminate> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

std::set<Symbol> DiffPoly::bases() const {
  std::set<Symbol> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first.base);
  return out;
}

DiffPoly add(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly out = a;
  out += b;
  return out;
}

DiffPoly mul(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  Rational c;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      c = ca * cb;
      DiffPoly::accumulate(out.terms_, ma * mb, c);
    }
  }
  return out;
}

DiffPoly total_derivative(const DiffPoly& p) {
  DiffPoly::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [ind, e] : m.factors()) {
      if (ind.base.is_constant()) continue;
      Monomial next = m.times(ind, -1).times(ind.derivative(), 1);
      DiffPoly::accumulate(out, next, c * e);
    }
  }
  return DiffPoly::from_terms(std::move(out));
}

DiffPoly total_derivative(const DiffPoly& p, int times) {
  DiffPoly out = p;
  for (int i = 0; i < times; ++i) out = total_derivative(out);
  return out;
}

}  // namespace maxsym::diffalg
