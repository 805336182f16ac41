#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pdquad/errors.hpp"

namespace pdquad {

inline constexpr std::size_t kMaxVariables = 24;
inline constexpr int kMaxExponent = 255;

/// Exponent vector with cached degree and support mask.
///
/// Exponents are stored as bytes; every operation that can grow an exponent
/// checks for overflow. The number of variables is part of the value, and
/// mixing monomials of different lengths is a StructuralError.
class Monomial {
 public:
  /// The unit monomial in `num_variables` variables.
  explicit Monomial(std::size_t num_variables = 1) : nvars_(static_cast<std::uint8_t>(num_variables)) {
    if (num_variables == 0 || num_variables > kMaxVariables)
      throw StructuralError("monomials need between 1 and " + std::to_string(kMaxVariables) +
                            " variables, got " + std::to_string(num_variables));
  }

  explicit Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
    for (std::size_t i = 0; i < exponents.size(); ++i) set_exponent(i, exponents[i]);
  }

  static Monomial variable(std::size_t num_variables, std::size_t index, int power = 1) {
    Monomial m(num_variables);
    m.set_exponent(index, power);
    return m;
  }

  std::size_t num_variables() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  std::uint32_t support() const noexcept { return support_; }
  bool is_one() const noexcept { return degree_ == 0; }
  int exponent(std::size_t i) const noexcept { return exps_[i]; }

  void set_exponent(std::size_t i, int e) {
    if (i >= nvars_) throw StructuralError("variable index out of range");
    if (e < 0 || e > kMaxExponent) throw ArgumentError("exponent out of range: " + std::to_string(e));
    degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
    exps_[i] = static_cast<std::uint8_t>(e);
    if (e) support_ |= (1U << i);
    else support_ &= ~(1U << i);
  }

  int weighted_degree(std::span<const int> weights) const noexcept {
    int d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += weights[i] * exps_[i];
    return d;
  }

  int num_support_variables() const noexcept { return std::popcount(support_); }

  bool divides(const Monomial& other) const noexcept {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const noexcept { return (support_ & other.support_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.check_same_length(b);
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      const int e = a.exps_[i] + b.exps_[i];
      if (e > kMaxExponent) throw ArgumentError("exponent overflow in monomial product");
      r.exps_[i] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    r.support_ = a.support_ | b.support_;
    return r;
  }

  /// Exact quotient; `b` must divide `a`.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    a.check_same_length(b);
    if (!b.divides(a)) throw ArgumentError("monomial quotient is not exact");
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] - b.exps_[i]);
      if (r.exps_[i]) r.support_ |= (1U << i);
    }
    r.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_same_length(b);
    Monomial r(a.nvars_);
    int d = 0;
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      d += r.exps_[i];
    }
    r.degree_ = static_cast<std::uint16_t>(d);
    r.support_ = a.support_ | b.support_;
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check_same_length(b);
    Monomial r(a.nvars_);
    int d = 0;
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
      d += r.exps_[i];
      if (r.exps_[i]) r.support_ |= (1U << i);
    }
    r.degree_ = static_cast<std::uint16_t>(d);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.support_ == b.support_ &&
           a.exps_ == b.exps_;
  }

  std::vector<int> exponents() const { return {exps_.begin(), exps_.begin() + nvars_}; }

  std::size_t hash() const noexcept {
    std::size_t h = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 1099511628211ULL ^ exps_[i];
    return h;
  }

  /// `x^2*y`-style rendering; "1" for the unit monomial.
  std::string to_string(std::span<const std::string> names) const;

  void check_same_length(const Monomial& other) const {
    if (nvars_ != other.nvars_)
      throw StructuralError("monomials of different lengths (" + std::to_string(nvars_) + " vs " +
                            std::to_string(other.nvars_) + ")");
  }

  /// Raw exponent access for the ordering routines.
  const std::array<std::uint8_t, kMaxVariables>& raw() const noexcept { return exps_; }

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint16_t degree_ = 0;
  std::uint8_t nvars_ = 1;
  std::uint32_t support_ = 0;
};

enum class OrderKind : std::uint8_t { grevlex, lex };

/// A monomial order: grevlex or lex on all variables, optionally refined into a
/// product order whose first `eliminate` variables form a grevlex block that is
/// compared before the rest. Variable 0 is the largest.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  int eliminate = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder elimination(int block) { return {OrderKind::grevlex, block}; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

enum class Ordering : std::int8_t { less = -1, equal = 0, greater = 1 };

namespace detail {

inline int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  const auto& x = a.raw();
  const auto& y = b.raw();
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += x[i];
    db += y[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;)
    if (x[i] != y[i]) return x[i] < y[i] ? 1 : -1;
  return 0;
}

inline int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  const auto& x = a.raw();
  const auto& y = b.raw();
  for (std::size_t i = lo; i < hi; ++i)
    if (x[i] != y[i]) return x[i] > y[i] ? 1 : -1;
  return 0;
}

/// Three-way comparison without the length check, for inner loops.
inline int compare_unchecked(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  const std::size_t n = a.num_variables();
  std::size_t lo = 0;
  if (order.eliminate > 0) {
    const auto block = static_cast<std::size_t>(order.eliminate);
    if (int c = grevlex_range(a, b, 0, block)) return c;
    lo = block;
  }
  if (order.kind == OrderKind::lex) return lex_range(a, b, lo, n);
  if (lo == 0) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    const auto& x = a.raw();
    const auto& y = b.raw();
    for (std::size_t i = n; i-- > 0;)
      if (x[i] != y[i]) return x[i] < y[i] ? 1 : -1;
    return 0;
  }
  return grevlex_range(a, b, lo, n);
}

}  // namespace detail

/// Compares two monomials of the same length in `order`.
inline Ordering monomial_compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  a.check_same_length(b);
  return static_cast<Ordering>(detail::compare_unchecked(a, b, order));
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace pdquad
