#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "pdquad/errors.hpp"

namespace pdquad {

/// Default coefficient field characteristic.
inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

bool is_prime(std::uint64_t n) noexcept;

/// Uniform draw from [0, bound) that only depends on the raw engine output,
/// so seeded runs reproduce across standard library implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return r % bound;
}

/// Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic) : p_(p) {
    if (p < 2 || p >= (1U << 31) || !is_prime(p))
      throw ArgumentError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }

  Element from_integer(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_integer(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
  }

  Element add(Element a, Element b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const {
    if (a == 0) throw ArgumentError("division by zero in " + name());
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t = t - q * new_t;
      std::swap(t, new_t);
      r = r - q * new_r;
      std::swap(r, new_r);
    }
    return static_cast<Element>(t < 0 ? t + p_ : t);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_one(Element a) const noexcept { return a == 1; }
  bool equal(Element a, Element b) const noexcept { return a == b; }

  /// Representative in (-p/2, p/2].
  long long to_signed(Element a) const noexcept {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
  }
  std::string to_string(Element a) const { return std::to_string(to_signed(a)); }

  Element random(std::mt19937_64& rng) const {
    return static_cast<Element>(uniform_below(rng, p_));
  }
  Element random_nonzero(std::mt19937_64& rng) const {
    return static_cast<Element>(1 + uniform_below(rng, p_ - 1));
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP.
class RationalField {
 public:
  using Element = mpq_class;

  /// Random elements are integers in [-kRandomBound, kRandomBound].
  static constexpr int kRandomBound = 7;

  std::uint32_t characteristic() const noexcept { return 0; }
  std::string name() const { return "QQ"; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_integer(long long v) const { return Element(mpz_class(static_cast<long>(v))); }
  Element from_integer(const mpz_class& v) const { return Element(v); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw ArgumentError("division by zero in QQ");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::string to_string(const Element& a) const { return a.get_str(); }

  Element random(std::mt19937_64& rng) const {
    return from_integer(static_cast<long long>(uniform_below(rng, 2 * kRandomBound + 1)) -
                        kRandomBound);
  }
  Element random_nonzero(std::mt19937_64& rng) const {
    long long v = static_cast<long long>(uniform_below(rng, 2 * kRandomBound)) - kRandomBound;
    if (v >= 0) ++v;
    return from_integer(v);
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace pdquad
