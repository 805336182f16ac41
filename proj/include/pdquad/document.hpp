#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pdquad/linear_matrix.hpp"

namespace pdquad {

/// Text form of an ideal and what is known about it:
///
///     # comment
///     ring GF(32003)[x,y,a,b]
///     order grevlex
///     gens: x^2, y^2, a*x + b*y
///     primes:
///       x, y
///     matrix:
///       x, 0, a
///       y, b, 0
///
/// `ring` comes first and is required. `order` defaults to grevlex. `gens`
/// may continue on indented lines. At least one of `gens` and `matrix` is
/// required; a matrix-only document stands for the ideal of its 2x2 minors.
template <class F>
struct IdealDocument {
  using Field = F;

  RingPtr<F> ring;
  std::vector<Polynomial<F>> gens;
  bool has_gens = false;
  /// Each declared prime as its list of generators.
  std::vector<std::vector<Polynomial<F>>> primes;
  std::optional<LinearMatrix<F>> matrix;

  /// The generators, or the minors of the matrix when no gens are given.
  Ideal<F> ideal() const;
  std::vector<Ideal<F>> prime_ideals() const;
};

using AnyDocument = std::variant<IdealDocument<PrimeField>, IdealDocument<RationalField>>;

/// Throws ParseError with the line and column of the offending text.
AnyDocument parse_document(std::string_view text);

/// Canonical text; parse_document(print_document(d)) reproduces d.
template <class F>
std::string print_document(const IdealDocument<F>& doc);

std::string print_document(const AnyDocument& doc);

/// Document for an ideal with optional primes.
template <class F>
IdealDocument<F> make_document(const Ideal<F>& I, std::vector<Ideal<F>> primes = {});

#define PDQUAD_DOCUMENT_EXTERN(F)                                                         \
  extern template struct IdealDocument<F>;                                                \
  extern template std::string print_document(const IdealDocument<F>&);                    \
  extern template IdealDocument<F> make_document(const Ideal<F>&, std::vector<Ideal<F>>);

PDQUAD_DOCUMENT_EXTERN(PrimeField)
PDQUAD_DOCUMENT_EXTERN(RationalField)
#undef PDQUAD_DOCUMENT_EXTERN

}  // namespace pdquad
