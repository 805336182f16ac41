#include "pdquad/field.hpp"
#include "pdquad/monomial.hpp"

namespace pdquad {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  if (is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (!exps_[i]) continue;
    if (!s.empty()) s += "*";
    s += i < names.size() ? names[i] : "v" + std::to_string(i);
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s;
}

std::string MonomialOrder::name() const {
  std::string base = kind == OrderKind::lex ? "lex" : "grevlex";
  if (eliminate > 0) return "elim(" + std::to_string(eliminate) + ")+" + base;
  return base;
}

}  // namespace pdquad
