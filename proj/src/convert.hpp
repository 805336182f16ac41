#pragma once

// Conversions between polynomials and module vectors. Internal.

#include "engine.hpp"
#include "pdquad/polynomial.hpp"

namespace pdquad::detail {

/// p * e_comp. The result is sorted when the order restricted to one
/// component agrees with the ring's order, which holds for every order built
/// from the ring's own MonomialOrder.
template <class F>
ModuleVector<F> to_module(const Polynomial<F>& p, std::uint32_t comp, const ModuleOrder& order) {
  ModuleVector<F> v;
  v.reserve(p.size());
  for (const auto& t : p.terms())
    v.push_back({t.monomial, order.key(t.monomial, comp), comp, t.coefficient});
  return v;
}

/// Component `comp` of v as a polynomial in `ring`.
template <class F>
Polynomial<F> component_of(const RingPtr<F>& ring, const ModuleVector<F>& v, std::uint32_t comp) {
  std::vector<typename Polynomial<F>::Term> terms;
  for (const auto& t : v)
    if (t.component == comp) terms.push_back({t.monomial, t.coefficient});
  return Polynomial<F>(ring, std::move(terms));
}

/// Rank-one vector to polynomial, trusting the term order.
template <class F>
Polynomial<F> ideal_element(const RingPtr<F>& ring, const ModuleVector<F>& v) {
  std::vector<typename Polynomial<F>::Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back({t.monomial, t.coefficient});
  return Polynomial<F>::from_sorted(ring, std::move(terms));
}

/// Monomial with `shift` leading zero exponents prepended.
inline Monomial shift_monomial(const Monomial& m, std::size_t shift, std::size_t total) {
  std::vector<int> e(total, 0);
  for (std::size_t i = 0; i < m.num_variables(); ++i) e[i + shift] = m.exponent(i);
  return Monomial(e);
}

/// Drops the first `shift` variables (which must have exponent zero).
inline Monomial unshift_monomial(const Monomial& m, std::size_t shift) {
  std::vector<int> e(m.num_variables() - shift);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = m.exponent(i + shift);
  return Monomial(e);
}

}  // namespace pdquad::detail
