#pragma once

#include <cstddef>
#include <vector>

#include "pdquad/errors.hpp"

namespace pdquad {

/// Dense row-major matrix over a field, for rank and kernel computations.
template <class F>
struct DenseMatrix {
  using Element = typename F::Element;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Element> data;

  DenseMatrix() = default;
  DenseMatrix(const F& K, std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, K.zero()) {}

  Element& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  DenseMatrix transposed(const F& K) const {
    DenseMatrix t(K, cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) t(c, r) = (*this)(r, c);
    return t;
  }
};

/// Brings `m` to reduced row echelon form in place and returns the pivot
/// column of each nonzero row.
template <class F>
std::vector<std::size_t> row_reduce(const F& K, DenseMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t p = row;
    while (p < m.rows && K.is_zero(m(p, col))) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(p, c), m(row, c));
    const auto inv = K.inv(m(row, col));
    for (std::size_t c = col; c < m.cols; ++c) m(row, c) = K.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || K.is_zero(m(r, col))) continue;
      const auto f = m(r, col);
      for (std::size_t c = col; c < m.cols; ++c) m(r, c) = K.sub(m(r, c), K.mul(f, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(const F& K, DenseMatrix<F> m) {
  return row_reduce(K, m).size();
}

/// Basis of {v : m v = 0}.
template <class F>
std::vector<std::vector<typename F::Element>> kernel(const F& K, DenseMatrix<F> m) {
  const auto pivots = row_reduce(K, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::Element>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Element> v(m.cols, K.zero());
    v[free] = K.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = K.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of {w : w m = 0}.
template <class F>
std::vector<std::vector<typename F::Element>> left_kernel(const F& K, const DenseMatrix<F>& m) {
  return kernel(K, m.transposed(K));
}

}  // namespace pdquad
