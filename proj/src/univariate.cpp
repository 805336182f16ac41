#include "pdquad/univariate.hpp"

#include <algorithm>
#include <random>

namespace pdquad {
namespace {

using GFPoly = UPoly<PrimeField>;

GFPoly mulmod(const GFPoly& a, const GFPoly& b, const GFPoly& m, const PrimeField& K) {
  return a.mul(b, K).divmod(m, K).second;
}

/// base^e mod m.
GFPoly powmod(GFPoly base, std::uint64_t e, const GFPoly& m, const PrimeField& K) {
  GFPoly result = GFPoly::constant(K, 1).divmod(m, K).second;
  base = base.divmod(m, K).second;
  while (e) {
    if (e & 1) result = mulmod(result, base, m, K);
    base = mulmod(base, base, m, K);
    e >>= 1;
  }
  return result;
}

/// Splits a monic product of distinct linear factors into its roots.
void split_linear(const GFPoly& f, const PrimeField& K, std::mt19937_64& rng, std::vector<std::uint32_t>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(K.neg(K.div(f.coefficient(0, K), f.leading())));
    return;
  }
  const std::uint32_t p = K.characteristic();
  for (;;) {
    // gcd(f, (t + a)^((p-1)/2) - 1) is a proper factor with probability about 1/2.
    GFPoly shift = GFPoly::linear(K, K.random(rng), 1);
    GFPoly h = powmod(shift, (p - 1) / 2, f, K).sub(GFPoly::constant(K, 1), K);
    GFPoly g = gcd(f, h, K);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_linear(g, K, rng, out);
      split_linear(f.divmod(g, K).first, K, rng, out);
      return;
    }
  }
}

mpz_class abs_z(const mpz_class& v) { return v < 0 ? mpz_class(-v) : v; }

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> small, large;
  const mpz_class a = abs_z(n);
  for (mpz_class d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<PrimeField::Element> roots(const UPoly<PrimeField>& f, const PrimeField& K) {
  if (f.is_zero()) throw ArgumentError("the zero polynomial has every element as a root");
  std::vector<std::uint32_t> out;
  if (f.degree() <= 0) return out;
  const std::uint32_t p = K.characteristic();
  if (p < 64) {
    for (std::uint32_t a = 0; a < p; ++a)
      if (K.is_zero(f.evaluate(a, K))) out.push_back(a);
    return out;
  }
  GFPoly m = f.monic(K);
  const GFPoly t = GFPoly::linear(K, 0, 1);
  // Product of the distinct linear factors: gcd(f, t^p - t).
  GFPoly g = gcd(m, powmod(t, p, m, K).sub(t, K), K);
  std::mt19937_64 rng(0x5eedULL);
  split_linear(g, K, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RationalField::Element> roots(const UPoly<RationalField>& f, const RationalField& K) {
  if (f.is_zero()) throw ArgumentError("the zero polynomial has every element as a root");
  std::vector<mpq_class> out;
  if (f.degree() <= 0) return out;
  // Primitive integer form.
  mpz_class lcm_den = 1;
  for (const auto& c : f.coefficients()) lcm_den = lcm(lcm_den, mpz_class(c.get_den()));
  std::vector<mpz_class> z;
  for (const auto& c : f.coefficients()) z.push_back(mpz_class(c * lcm_den));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) out.push_back(mpq_class(0));
  const mpz_class a0 = z[low], an = z.back();
  for (const auto& p : divisors(a0))
    for (const auto& q : divisors(an))
      for (int sign : {1, -1}) {
        mpq_class r(sign * p, q);
        r.canonicalize();
        if (K.is_zero(f.evaluate(r, K)) && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pdquad
