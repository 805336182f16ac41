#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdquad/ring.hpp"

namespace pdquad {

/// Sparse multivariate polynomial: terms sorted strictly descending in the
/// ring's order, no zero coefficients.
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;

  struct Term {
    Monomial monomial;
    Element coefficient;
  };

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {
    if (!ring_) throw StructuralError("polynomial without a ring");
  }

  /// Canonicalizes arbitrary terms: sorts, merges equal monomials, drops zeros.
  Polynomial(RingPtr<F> ring, std::vector<Term> terms) : Polynomial(std::move(ring)) {
    const auto& K = ring_->field();
    for (const auto& t : terms)
      if (t.monomial.num_variables() != ring_->num_variables())
        throw StructuralError("term has the wrong number of variables");
    std::sort(terms.begin(), terms.end(), [this](const Term& a, const Term& b) {
      return detail::compare_unchecked(a.monomial, b.monomial, ring_->order()) > 0;
    });
    for (auto& t : terms) {
      if (!terms_.empty() && terms_.back().monomial == t.monomial) {
        terms_.back().coefficient = K.add(terms_.back().coefficient, t.coefficient);
        if (K.is_zero(terms_.back().coefficient)) terms_.pop_back();
      } else if (!K.is_zero(t.coefficient)) {
        terms_.push_back(std::move(t));
      }
    }
  }

  static Polynomial constant(RingPtr<F> ring, Element c) {
    Monomial one = ring->one();
    return Polynomial(ring, std::vector<Term>{{one, std::move(c)}});
  }
  template <std::integral I>
    requires(!std::same_as<I, Element>)
  static Polynomial constant(RingPtr<F> ring, I c) {
    auto v = ring->field().from_integer(static_cast<long long>(c));
    return constant(std::move(ring), std::move(v));
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t index) {
    Monomial m = ring->variable(index);
    return Polynomial(ring, std::vector<Term>{{m, ring->field().one()}});
  }
  static Polynomial monomial(RingPtr<F> ring, Monomial m, Element c) {
    return Polynomial(std::move(ring), std::vector<Term>{{std::move(m), std::move(c)}});
  }
  /// Terms already in canonical order; only checked in debug builds.
  static Polynomial from_sorted(RingPtr<F> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr<F>& ring() const noexcept { return ring_; }
  const F& field() const noexcept { return ring_->field(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw ArgumentError("the zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Element& leading_coefficient() const { return leading_term().coefficient; }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }

  /// Maximum total degree; -1 for zero.
  int degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  /// True iff every term has degree `d`. The zero polynomial is homogeneous of any degree.
  bool is_homogeneous_of_degree(int d) const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.monomial.degree() == d; });
  }
  bool is_homogeneous() const noexcept {
    return terms_.empty() || is_homogeneous_of_degree(terms_.front().monomial.degree());
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = field().neg(t.coefficient);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    Polynomial acc(a.ring_);
    // Sum of shifted copies of the longer factor keeps each step a linear merge.
    const Polynomial& longer = a.size() >= b.size() ? a : b;
    const Polynomial& shorter = a.size() >= b.size() ? b : a;
    for (const auto& t : shorter.terms_) acc = acc + longer.times_term(t.monomial, t.coefficient);
    return acc;
  }

  Polynomial scaled(const Element& c) const {
    const auto& K = field();
    if (K.is_zero(c)) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = K.mul(t.coefficient, c);
    return r;
  }

  Polynomial times_term(const Monomial& m, const Element& c) const {
    const auto& K = field();
    Polynomial r(ring_);
    if (K.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, K.mul(t.coefficient, c)});
    return r;
  }

  Polynomial pow(int e) const {
    if (e < 0) throw ArgumentError("negative exponent");
    Polynomial r = constant(ring_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Scales so the leading coefficient is one. Zero stays zero.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading_coefficient()));
  }

  /// Homogeneous component of degree `d`.
  Polynomial homogeneous_part(int d) const {
    Polynomial r(ring_);
    for (const auto& t : terms_)
      if (t.monomial.degree() == d) r.terms_.push_back(t);
    return r;
  }

  /// Coefficient of `m`, zero if absent.
  Element coefficient_of(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coefficient;
    return field().zero();
  }

  /// Coefficient vector of a linear form, one entry per variable.
  std::vector<Element> linear_coefficients() const {
    std::vector<Element> c(ring_->num_variables(), field().zero());
    for (const auto& t : terms_) {
      if (t.monomial.degree() != 1) throw ArgumentError("not a linear form: " + to_string());
      for (std::size_t i = 0; i < c.size(); ++i)
        if (t.monomial.exponent(i)) c[i] = t.coefficient;
    }
    return c;
  }

  static Polynomial linear_form(RingPtr<F> ring, std::span<const Element> coefficients) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
      terms.push_back({ring->variable(i), coefficients[i]});
    return Polynomial(std::move(ring), std::move(terms));
  }

  /// Substitutes `images[i]` for variable i. Images live in `target`.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->num_variables())
      throw StructuralError("substitution needs one image per variable");
    if (images.empty()) return *this;
    RingPtr<F> target = images.front().ring();
    Polynomial r(target);
    for (const auto& t : terms_) {
      Polynomial p = constant(target, t.coefficient);
      for (std::size_t i = 0; i < images.size(); ++i)
        for (int k = 0; k < t.monomial.exponent(i); ++k) p = p * images[i];
      r = r + p;
    }
    return r;
  }

  /// Formal partial derivative in variable i.
  Polynomial derivative(std::size_t i) const {
    const auto& K = field();
    std::vector<Term> out;
    for (const auto& t : terms_) {
      const int e = t.monomial.exponent(i);
      if (e == 0) continue;
      Monomial m = t.monomial;
      m.set_exponent(i, e - 1);
      out.push_back({m, K.mul(t.coefficient, K.from_integer(e))});
    }
    return Polynomial(ring_, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    const auto& K = a.field();
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
          !K.equal(a.terms_[i].coefficient, b.terms_[i].coefficient))
        return false;
    return true;
  }

  /// Canonical text form, parseable by parse_polynomial.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    const auto& K = field();
    const auto& names = ring_->variable_names();
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      std::string c = K.to_string(t.coefficient);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (i == 0) s += negative ? "-" : "";
      else s += negative ? " - " : " + ";
      const bool unit = c == "1";
      if (t.monomial.is_one()) s += c;
      else if (unit) s += t.monomial.to_string(names);
      else s += c + "*" + t.monomial.to_string(names);
    }
    return s;
  }

 private:
  Polynomial combine(const Polynomial& b, bool subtract) const {
    require_same_ring(ring_, b.ring_);
    const auto& K = field();
    const auto& order = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == terms_.size()) c = -1;
      else if (j == b.terms_.size()) c = 1;
      else c = detail::compare_unchecked(terms_[i].monomial, b.terms_[j].monomial, order);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.monomial, subtract ? K.neg(t.coefficient) : t.coefficient});
      } else {
        Element v = subtract ? K.sub(terms_[i].coefficient, b.terms_[j].coefficient)
                             : K.add(terms_[i].coefficient, b.terms_[j].coefficient);
        if (!K.is_zero(v)) r.terms_.push_back({terms_[i].monomial, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

template <class F>
using PolynomialList = std::vector<Polynomial<F>>;

/// A polynomial that is homogeneous of degree one (or zero).
template <class F>
class LinearForm {
 public:
  explicit LinearForm(Polynomial<F> p) : p_(std::move(p)) {
    if (!p_.is_homogeneous_of_degree(1)) throw ArgumentError("not a linear form: " + p_.to_string());
  }
  const Polynomial<F>& polynomial() const noexcept { return p_; }
  operator const Polynomial<F>&() const noexcept { return p_; }

 private:
  Polynomial<F> p_;
};

/// Deterministic random linear form supported on `support`; never zero.
/// Each coefficient is uniform over the whole field, then redrawn if the
/// result would vanish.
template <class F>
Polynomial<F> random_linear_form(const RingPtr<F>& ring, std::mt19937_64& rng,
                                 std::span<const std::size_t> support) {
  if (support.empty()) throw ArgumentError("random linear form needs a non-empty support");
  const auto& K = ring->field();
  for (;;) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (std::size_t v : support) {
      if (v >= ring->num_variables()) throw ArgumentError("support variable out of range");
      terms.push_back({ring->variable(v), K.random(rng)});
    }
    Polynomial<F> p(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

template <class F>
Polynomial<F> random_linear_form(const RingPtr<F>& ring, std::uint64_t seed,
                                 std::span<const std::size_t> support) {
  std::mt19937_64 rng(seed);
  return random_linear_form(ring, rng, support);
}

/// Random linear form in all variables.
template <class F>
Polynomial<F> random_linear_form(const RingPtr<F>& ring, std::mt19937_64& rng) {
  std::vector<std::size_t> all(ring->num_variables());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return random_linear_form(ring, rng, all);
}

/// Random homogeneous quadric in all variables, coefficients uniform.
template <class F>
Polynomial<F> random_quadric(const RingPtr<F>& ring, std::mt19937_64& rng) {
  const auto& K = ring->field();
  const std::size_t n = ring->num_variables();
  std::vector<typename Polynomial<F>::Term> terms;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) terms.push_back({ring->variable(i) * ring->variable(j), K.random(rng)});
  return Polynomial<F>(ring, std::move(terms));
}

}  // namespace pdquad
