#pragma once

#include <string>
#include <vector>

#include "pdquad/ideal.hpp"
#include "pdquad/parse.hpp"

namespace testing_support {

using pdquad::PrimeField;
using pdquad::RationalField;
using GF = PrimeField;
using QQ = RationalField;

inline pdquad::RingPtr<GF> gf_ring(std::vector<std::string> vars, std::uint32_t p = 32003,
                                   pdquad::MonomialOrder order = pdquad::MonomialOrder::grevlex()) {
  return pdquad::make_ring(GF(p), std::move(vars), order);
}

inline pdquad::RingPtr<QQ> qq_ring(std::vector<std::string> vars) {
  return pdquad::make_ring(QQ(), std::move(vars));
}

template <class F>
pdquad::Polynomial<F> P(const pdquad::RingPtr<F>& ring, const std::string& text) {
  return pdquad::parse_polynomial(ring, text);
}

template <class F>
std::vector<pdquad::Polynomial<F>> Ps(const pdquad::RingPtr<F>& ring, const std::vector<std::string>& texts) {
  std::vector<pdquad::Polynomial<F>> out;
  for (const auto& t : texts) out.push_back(P(ring, t));
  return out;
}

template <class F>
pdquad::Ideal<F> Id(const pdquad::RingPtr<F>& ring, const std::vector<std::string>& texts) {
  return pdquad::Ideal<F>(ring, Ps(ring, texts));
}

/// Two-sided generator membership, independent of the cached-basis equality.
template <class F>
bool same_ideal(const pdquad::Ideal<F>& a, const pdquad::Ideal<F>& b) {
  return a.contains(b) && b.contains(a);
}

}  // namespace testing_support
