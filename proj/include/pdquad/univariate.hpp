#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pdquad/field.hpp"

namespace pdquad {

/// Dense univariate polynomial over F, coefficients from the constant term up,
/// with no trailing zeros. The zero polynomial has no coefficients.
template <class F>
class UPoly {
 public:
  using Element = typename F::Element;

  UPoly() = default;
  UPoly(const F& K, std::vector<Element> coefficients) : c_(std::move(coefficients)) { normalize(K); }
  static UPoly constant(const F& K, Element c) { return UPoly(K, {std::move(c)}); }
  /// a + b*t.
  static UPoly linear(const F& K, Element a, Element b) { return UPoly(K, {std::move(a), std::move(b)}); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for zero.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Element>& coefficients() const noexcept { return c_; }
  const Element& leading() const { return c_.back(); }
  Element coefficient(std::size_t i, const F& K) const { return i < c_.size() ? c_[i] : K.zero(); }

  UPoly add(const UPoly& o, const F& K) const {
    std::vector<Element> r(std::max(c_.size(), o.c_.size()), K.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = K.add(r[i], o.c_[i]);
    return UPoly(K, std::move(r));
  }
  UPoly sub(const UPoly& o, const F& K) const { return add(o.scaled(K.neg(K.one()), K), K); }
  UPoly scaled(const Element& s, const F& K) const {
    std::vector<Element> r = c_;
    for (auto& v : r) v = K.mul(v, s);
    return UPoly(K, std::move(r));
  }
  UPoly mul(const UPoly& o, const F& K) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Element> r(c_.size() + o.c_.size() - 1, K.zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(c_[i], o.c_[j]));
    return UPoly(K, std::move(r));
  }

  /// Quotient and remainder; throws on division by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d, const F& K) const {
    if (d.is_zero()) throw ArgumentError("polynomial division by zero");
    if (degree() < d.degree()) return {UPoly(), *this};
    std::vector<Element> r = c_;
    std::vector<Element> q(c_.size() - d.c_.size() + 1, K.zero());
    const Element lead_inv = K.inv(d.leading());
    for (std::size_t k = q.size(); k-- > 0;) {
      const Element f = K.mul(r[k + d.c_.size() - 1], lead_inv);
      q[k] = f;
      if (K.is_zero(f)) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] = K.sub(r[k + j], K.mul(f, d.c_[j]));
    }
    return {UPoly(K, std::move(q)), UPoly(K, std::move(r))};
  }

  UPoly monic(const F& K) const { return is_zero() ? *this : scaled(K.inv(leading()), K); }

  Element evaluate(const Element& x, const F& K) const {
    Element acc = K.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = K.add(K.mul(acc, x), c_[i]);
    return acc;
  }

  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Text in the variable `var`, highest degree first.
  std::string to_string(const F& K, const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (K.is_zero(c_[i])) continue;
      std::string c = K.to_string(c_[i]);
      const bool neg = c[0] == '-';
      if (neg) c.erase(0, 1);
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (mono.empty()) s += c;
      else if (c == "1") s += mono;
      else s += c + "*" + mono;
    }
    return s;
  }

 private:
  void normalize(const F& K) {
    while (!c_.empty() && K.is_zero(c_.back())) c_.pop_back();
  }

  std::vector<Element> c_;
};

template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b, const F& K) {
  while (!b.is_zero()) {
    auto r = a.divmod(b, K).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic(K);
}

/// Distinct roots in the base field, sorted ascending (by representative in
/// [0, p) for prime fields, numerically for the rationals).
std::vector<PrimeField::Element> roots(const UPoly<PrimeField>& f, const PrimeField& K);
std::vector<RationalField::Element> roots(const UPoly<RationalField>& f, const RationalField& K);

}  // namespace pdquad
