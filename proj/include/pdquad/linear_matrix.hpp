#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pdquad/ideal.hpp"
#include "pdquad/univariate.hpp"

namespace pdquad {

/// A column of a two-row matrix: (top, bottom).
template <class F>
using Column2 = std::array<Polynomial<F>, 2>;

/// 2 x (n+1) matrix of linear forms whose first column (x, y) consists of two
/// independent linear forms.
template <class F>
class LinearMatrix {
 public:
  using Poly = Polynomial<F>;

  LinearMatrix(RingPtr<F> ring, std::vector<Column2<F>> columns);
  static LinearMatrix from_rows(RingPtr<F> ring, const std::vector<Poly>& top, const std::vector<Poly>& bottom);

  const RingPtr<F>& ring() const noexcept { return ring_; }
  /// n: the number of columns after the first.
  std::size_t n() const noexcept { return columns_.size() - 1; }
  std::size_t num_columns() const noexcept { return columns_.size(); }
  const Poly& entry(std::size_t row, std::size_t col) const { return columns_.at(col).at(row); }
  const Column2<F>& column(std::size_t c) const { return columns_.at(c); }
  const std::vector<Column2<F>>& columns() const noexcept { return columns_; }
  const Poly& x() const { return columns_[0][0]; }
  const Poly& y() const { return columns_[0][1]; }

  /// Columns at the given indices, in that order.
  std::vector<Column2<F>> select(const std::vector<std::size_t>& indices) const;

  /// Two lines, entries separated by ", ".
  std::string to_string() const;

  friend bool operator==(const LinearMatrix& a, const LinearMatrix& b) { return a.columns_ == b.columns_; }

 private:
  RingPtr<F> ring_;
  std::vector<Column2<F>> columns_;
};

/// sum_j c_j * (s * top_j + t * bottom_j) = 0.
template <class F>
struct GeneralizedZeroWitness {
  typename F::Element s, t;
  std::vector<typename F::Element> c;
};

enum class ZeroSearch { witness, none_over_base, none_absolutely };

template <class F>
struct GeneralizedZeroResult {
  ZeroSearch status;
  std::optional<GeneralizedZeroWitness<F>> witness;
  /// g(s, t), the gcd of the maximal minors of C(s, t); "0" when every point is a zero.
  std::string binary_form;
};

/// Searches for a generalized zero of the two-row matrix with the given
/// columns. Literal zero entries are preferred (top row first), then points
/// (1 : tau) with tau ascending, then (0 : 1).
template <class F>
GeneralizedZeroResult<F> find_generalized_zero(const RingPtr<F>& ring, const std::vector<Column2<F>>& columns);

template <class F>
GeneralizedZeroResult<F> find_generalized_zero(const LinearMatrix<F>& M) {
  return find_generalized_zero(M.ring(), M.columns());
}

/// The identity carried by the witness, as a polynomial; zero iff the witness is sound.
template <class F>
Polynomial<F> witness_residual(const RingPtr<F>& ring, const std::vector<Column2<F>>& columns,
                               const GeneralizedZeroWitness<F>& w);

template <class F>
bool is_one_generic(const RingPtr<F>& ring, const std::vector<Column2<F>>& columns) {
  return find_generalized_zero(ring, columns).status == ZeroSearch::none_absolutely;
}
template <class F>
bool is_one_generic(const LinearMatrix<F>& M) {
  return is_one_generic(M.ring(), M.columns());
}

/// Ideal of the minors det[col_0, col_j], j = 1..n.
template <class F>
Ideal<F> ideal_from_minors(const LinearMatrix<F>& M);

/// All 2x2 minors of the matrix, every pair of columns.
template <class F>
Ideal<F> all_minors(const LinearMatrix<F>& M);

/// Ideal of the k x k minors of an arbitrary matrix given by rows.
template <class F>
Ideal<F> minors_ideal(const RingPtr<F>& ring, const std::vector<std::vector<Polynomial<F>>>& rows, std::size_t k);

/// Writes each quadric as det[[x, a1], [y, a2]] = x*a2 - y*a1. The result has
/// first column (x, y) followed by one column per quadric.
template <class F>
LinearMatrix<F> represent_by_coefficients(const std::vector<Polynomial<F>>& quadrics, const Polynomial<F>& x,
                                          const Polynomial<F>& y);

/// I_2(M) is contained in I : (x, y).
template <class F>
bool cramer_containment(const Ideal<F>& I, const LinearMatrix<F>& M);

/// An operation that keeps ideal_from_minors unchanged.
template <class F>
struct ElementaryOp {
  using Element = typename F::Element;
  enum class Kind { row_op, column_combine, add_first, permute };

  Kind kind = Kind::row_op;
  /// row_op: new rows = P * rows, P = [[p00, p01], [p10, p11]] invertible.
  std::array<Element, 4> P{};
  /// column_combine and add_first: the column that is replaced.
  std::size_t target = 0;
  /// column_combine: col_target <- sum_{k >= 1} coefficients[k] * col_k with
  /// coefficients[0] = 0 and coefficients[target] != 0.
  std::vector<Element> coefficients;
  /// add_first: col_target <- col_target + scalar * col_0.
  Element scalar{};
  /// permute: new column k is old column permutation[k]; permutation[0] = 0.
  std::vector<std::size_t> permutation;

  static ElementaryOp row(std::array<Element, 4> P);
  static ElementaryOp combine(std::size_t target, std::vector<Element> coefficients);
  static ElementaryOp add_first_column(std::size_t target, Element scalar);
  static ElementaryOp permute_columns(std::vector<std::size_t> permutation);

  std::string describe(const F& K) const;
};

template <class F>
using ElementaryOpLog = std::vector<ElementaryOp<F>>;

/// Applies one op, validating it.
template <class F>
LinearMatrix<F> apply(const ElementaryOp<F>& op, const LinearMatrix<F>& M);

template <class F>
LinearMatrix<F> replay(const ElementaryOpLog<F>& log, LinearMatrix<F> M) {
  for (const auto& op : log) M = apply(op, M);
  return M;
}

enum class CanonicalType { T1 = 1, T2, T3, T4, T5 };

std::string to_string(CanonicalType t);

template <class F>
struct CanonicalFormReport {
  CanonicalType type;
  LinearMatrix<F> matrix;
  ElementaryOpLog<F> log;
  std::optional<typename F::Element> lambda;
};

/// Reduces M to one of five normal shapes:
///   T1  M is 1-generic;
///   T2  [[x, 0, D...], [y, a21, D...]] with D = columns 0, 2.. 1-generic;
///   T3  two zeros in the top row, at columns 1 and 2;
///   T4  [[x, 0, a12, D...], [y, a21, 0, D...]] with D = columns 0, 3.. 1-generic;
///   T5  [[x, 0, a12, a13, ...], [y, a21, 0, lambda * a13, ...]].
/// Throws PreconditionError unless the minor ideal has height 2, and
/// ExtensionNeededError when a generalized zero exists only over an extension.
template <class F>
CanonicalFormReport<F> canonical_form(const LinearMatrix<F>& M);

/// Checks the defining conditions of the report's type on its matrix.
template <class F>
bool satisfies_type(const CanonicalFormReport<F>& report);

#define PDQUAD_LINEAR_MATRIX_EXTERN(F)                                                                         \
  extern template class LinearMatrix<F>;                                                                       \
  extern template struct ElementaryOp<F>;                                                                      \
  extern template GeneralizedZeroResult<F> find_generalized_zero(const RingPtr<F>&,                            \
                                                                 const std::vector<Column2<F>>&);              \
  extern template Polynomial<F> witness_residual(const RingPtr<F>&, const std::vector<Column2<F>>&,            \
                                                 const GeneralizedZeroWitness<F>&);                            \
  extern template Ideal<F> ideal_from_minors(const LinearMatrix<F>&);                                          \
  extern template Ideal<F> all_minors(const LinearMatrix<F>&);                                                 \
  extern template Ideal<F> minors_ideal(const RingPtr<F>&, const std::vector<std::vector<Polynomial<F>>>&,    \
                                        std::size_t);                                                          \
  extern template LinearMatrix<F> represent_by_coefficients(const std::vector<Polynomial<F>>&,                 \
                                                            const Polynomial<F>&, const Polynomial<F>&);       \
  extern template bool cramer_containment(const Ideal<F>&, const LinearMatrix<F>&);                            \
  extern template LinearMatrix<F> apply(const ElementaryOp<F>&, const LinearMatrix<F>&);                       \
  extern template CanonicalFormReport<F> canonical_form(const LinearMatrix<F>&);                               \
  extern template bool satisfies_type(const CanonicalFormReport<F>&);

PDQUAD_LINEAR_MATRIX_EXTERN(PrimeField)
PDQUAD_LINEAR_MATRIX_EXTERN(RationalField)
#undef PDQUAD_LINEAR_MATRIX_EXTERN

}  // namespace pdquad
