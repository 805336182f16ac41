#include <algorithm>
#include <bit>

#include "pdquad/ideal.hpp"

namespace pdquad {
namespace {

using Series = std::vector<long long>;

void trim(Series& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Series add(const Series& a, const Series& b, std::size_t shift_b) {
  Series r(std::max(a.size(), b.size() + shift_b), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift_b] += b[i];
  trim(r);
  return r;
}

/// Multiplies by (1 - t^d).
Series times_one_minus(const Series& a, int d) {
  Series r(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] += a[i];
    r[i + d] -= a[i];
  }
  trim(r);
  return r;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> kept;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  gens = std::move(kept);
}

// K(M) = K(M + (p)) + t^deg(p) K(M : p) for a pivot monomial p, down to
// pairwise coprime generators where K is a product of (1 - t^d).
Series k_polynomial(std::vector<Monomial> gens, std::size_t n) {
  minimalize(gens);
  if (gens.empty()) return {1};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    Series r{1};
    for (const auto& m : gens) r = times_one_minus(r, m.degree());
    return r;
  }

  std::vector<int> count(n, 0);
  for (const auto& m : gens)
    for (std::size_t v = 0; v < n; ++v)
      if (m.exponent(v)) ++count[v];
  const std::size_t v = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<int> exps;
  for (const auto& m : gens)
    if (m.exponent(v)) exps.push_back(m.exponent(v));
  std::sort(exps.begin(), exps.end());
  const int e = exps[(exps.size() - 1) / 2];
  const Monomial p = Monomial::variable(n, v, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& m : gens) colon.push_back(m / Monomial::gcd(m, p));
  return add(k_polynomial(std::move(plus), n), k_polynomial(std::move(colon), n), static_cast<std::size_t>(e));
}

}  // namespace

std::vector<long long> monomial_hilbert_numerator(std::vector<Monomial> generators, std::size_t num_variables) {
  return k_polynomial(std::move(generators), num_variables);
}

HilbertData reduce_hilbert_numerator(std::vector<long long> numerator, int num_variables) {
  trim(numerator);
  auto at_one = [](const Series& p) {
    long long s = 0;
    for (long long c : p) s += c;
    return s;
  };
  if (numerator.size() == 1 && numerator[0] == 0) throw DimensionError("Hilbert series of the zero module");
  int d = num_variables;
  while (at_one(numerator) == 0) {
    // Exact division by (1 - t): quotient coefficients are prefix sums.
    Series q(numerator.size() - 1, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < numerator.size(); ++i) {
      acc += numerator[i];
      q[i] = acc;
    }
    numerator = std::move(q);
    trim(numerator);
    --d;
  }
  HilbertData h;
  h.multiplicity = at_one(numerator);
  h.numerator = std::move(numerator);
  h.dimension = d;
  return h;
}

int max_independent_set(const std::vector<Monomial>& monomials, std::size_t num_variables) {
  std::vector<std::uint32_t> masks;
  for (const auto& m : monomials) masks.push_back(m.support());
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  // Supersets of another support impose nothing new.
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t m : masks) {
    if (m == 0) return -1;
    bool redundant = false;
    for (std::uint32_t k : minimal)
      if ((k & m) == k) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(m);
  }
  // Minimum hitting set of the supports, by branch and bound.
  int best = static_cast<int>(num_variables);
  auto search = [&](auto&& self, std::uint32_t chosen, int size) -> void {
    if (size >= best) return;
    for (std::uint32_t m : minimal) {
      if (m & chosen) continue;
      for (std::uint32_t rest = m; rest; rest &= rest - 1) self(self, chosen | (rest & (~rest + 1)), size + 1);
      return;
    }
    best = size;
  };
  search(search, 0, 0);
  return static_cast<int>(num_variables) - best;
}

template <class F>
int dimension(const Ideal<F>& I) {
  const auto& G = I.groebner();
  if (G.is_unit()) throw DimensionError("the unit ideal has no dimension");
  return max_independent_set(G.leading_monomials(), I.ring()->num_variables());
}

template <class F>
std::vector<long long> hilbert_numerator(const Ideal<F>& I) {
  if (!I.is_homogeneous()) throw ArgumentError("Hilbert series needs homogeneous generators");
  const auto& G = I.groebner();
  if (G.is_unit()) throw DimensionError("the unit ideal has no Hilbert series");
  return monomial_hilbert_numerator(G.leading_monomials(), I.ring()->num_variables());
}

template <class F>
HilbertData hilbert(const Ideal<F>& I) {
  return reduce_hilbert_numerator(hilbert_numerator(I), static_cast<int>(I.ring()->num_variables()));
}

#define PDQUAD_INSTANTIATE(F)                                       \
  template int dimension(const Ideal<F>&);                          \
  template std::vector<long long> hilbert_numerator(const Ideal<F>&); \
  template HilbertData hilbert(const Ideal<F>&);

PDQUAD_INSTANTIATE(PrimeField)
PDQUAD_INSTANTIATE(RationalField)

}  // namespace pdquad
