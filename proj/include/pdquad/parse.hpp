#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pdquad/polynomial.hpp"

namespace pdquad {

/// Parses the polynomial text syntax: terms joined by `+`/`-`, `*` for
/// products, `^` for non-negative integer powers, parentheses, integer or
/// `a/b` rational literals. Whitespace is ignored. Every identifier must be a
/// variable of `ring`. Errors carry positions offset by (`line`, `column`).
template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text, int line = 1,
                               int column = 1);

/// A piece of a comma-separated list together with its starting column.
struct ListItem {
  std::string text;
  int column;
};

/// Splits on commas that are not nested in parentheses. Empty pieces are kept
/// so that callers can report them.
std::vector<ListItem> split_top_level(std::string_view text, int column = 1);

extern template Polynomial<PrimeField> parse_polynomial(const RingPtr<PrimeField>&, std::string_view,
                                                        int, int);
extern template Polynomial<RationalField> parse_polynomial(const RingPtr<RationalField>&,
                                                           std::string_view, int, int);

}  // namespace pdquad
