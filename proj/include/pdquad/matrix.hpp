#pragma once

#include <map>
#include <random>
#include <vector>

#include "pdquad/linalg.hpp"
#include "pdquad/polynomial.hpp"

namespace pdquad {

/// Matrix of polynomials stored by sparse columns. Absent entries are zero.
template <class F>
class SparseMatrix {
 public:
  using Poly = Polynomial<F>;
  using Column = std::map<std::size_t, Poly>;

  SparseMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), columns_(cols) {}

  const RingPtr<F>& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  Poly entry(std::size_t r, std::size_t c) const {
    check(r, c);
    auto it = columns_[c].find(r);
    return it == columns_[c].end() ? Poly(ring_) : it->second;
  }
  void set(std::size_t r, std::size_t c, Poly p) {
    check(r, c);
    if (p.is_zero()) columns_[c].erase(r);
    else columns_[c].insert_or_assign(r, std::move(p));
  }
  const Column& column(std::size_t c) const { return columns_.at(c); }
  void append_column(Column col) {
    for (const auto& [r, p] : col)
      if (r >= rows_) throw StructuralError("column entry outside the matrix");
    columns_.push_back(std::move(col));
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }
  bool is_zero() const { return nonzeros() == 0; }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.cols() != b.rows_) throw StructuralError("matrix product shape mismatch");
    SparseMatrix out(a.ring_, a.rows_, b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Column acc;
      for (const auto& [k, bk] : b.columns_[j])
        for (const auto& [i, aik] : a.columns_[k]) {
          auto it = acc.find(i);
          if (it == acc.end()) acc.emplace(i, aik * bk);
          else it->second = it->second + aik * bk;
        }
      for (auto& [i, p] : acc)
        if (!p.is_zero()) out.columns_[j].emplace(i, std::move(p));
    }
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return same_ring(a.ring_, b.ring_) && a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

  /// Values at a point of K^N.
  DenseMatrix<F> evaluate(const std::vector<typename F::Element>& point) const {
    const F& K = ring_->field();
    DenseMatrix<F> m(K, rows_, cols());
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, p] : columns_[c]) m(r, c) = evaluate_polynomial(p, point);
    return m;
  }

  static typename F::Element evaluate_polynomial(const Poly& p, const std::vector<typename F::Element>& point) {
    const F& K = p.field();
    auto acc = K.zero();
    for (const auto& t : p.terms()) {
      auto v = t.coefficient;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (int e = 0; e < t.monomial.exponent(i); ++e) v = K.mul(v, point[i]);
      acc = K.add(acc, v);
    }
    return acc;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= columns_.size()) throw StructuralError("matrix index out of range");
  }

  RingPtr<F> ring_;
  std::size_t rows_;
  std::vector<Column> columns_;
};

}  // namespace pdquad
