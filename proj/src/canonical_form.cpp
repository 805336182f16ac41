#include <algorithm>
#include <numeric>

#include "pdquad/linear_matrix.hpp"

namespace pdquad {

std::string to_string(CanonicalType t) { return "T" + std::to_string(static_cast<int>(t)); }

template <class F>
ElementaryOp<F> ElementaryOp<F>::row(std::array<Element, 4> P) {
  ElementaryOp op;
  op.kind = Kind::row_op;
  op.P = std::move(P);
  return op;
}

template <class F>
ElementaryOp<F> ElementaryOp<F>::combine(std::size_t target, std::vector<Element> coefficients) {
  ElementaryOp op;
  op.kind = Kind::column_combine;
  op.target = target;
  op.coefficients = std::move(coefficients);
  return op;
}

template <class F>
ElementaryOp<F> ElementaryOp<F>::add_first_column(std::size_t target, Element scalar) {
  ElementaryOp op;
  op.kind = Kind::add_first;
  op.target = target;
  op.scalar = std::move(scalar);
  return op;
}

template <class F>
ElementaryOp<F> ElementaryOp<F>::permute_columns(std::vector<std::size_t> permutation) {
  ElementaryOp op;
  op.kind = Kind::permute;
  op.permutation = std::move(permutation);
  return op;
}

template <class F>
std::string ElementaryOp<F>::describe(const F& K) const {
  switch (kind) {
    case Kind::row_op:
      return "rows <- [[" + K.to_string(P[0]) + ", " + K.to_string(P[1]) + "], [" + K.to_string(P[2]) + ", " +
             K.to_string(P[3]) + "]] * rows";
    case Kind::column_combine: {
      std::string s = "c" + std::to_string(target) + " <-";
      bool first = true;
      for (std::size_t k = 1; k < coefficients.size(); ++k) {
        if (K.is_zero(coefficients[k])) continue;
        s += (first ? " " : " + ") + K.to_string(coefficients[k]) + "*c" + std::to_string(k);
        first = false;
      }
      return s;
    }
    case Kind::add_first:
      return "c" + std::to_string(target) + " += " + K.to_string(scalar) + "*c0";
    case Kind::permute: {
      std::string s = "columns <- (";
      for (std::size_t k = 0; k < permutation.size(); ++k) s += (k ? " c" : "c") + std::to_string(permutation[k]);
      return s + ")";
    }
  }
  return "";
}

template <class F>
LinearMatrix<F> apply(const ElementaryOp<F>& op, const LinearMatrix<F>& M) {
  using Op = ElementaryOp<F>;
  const F& K = M.ring()->field();
  const std::size_t cols = M.num_columns();
  auto columns = M.columns();
  switch (op.kind) {
    case Op::Kind::row_op: {
      const auto& P = op.P;
      if (K.is_zero(K.sub(K.mul(P[0], P[3]), K.mul(P[1], P[2])))) throw ArgumentError("singular row operation");
      for (auto& col : columns) {
        auto top = col[0].scaled(P[0]) + col[1].scaled(P[1]);
        auto bottom = col[0].scaled(P[2]) + col[1].scaled(P[3]);
        col = {std::move(top), std::move(bottom)};
      }
      break;
    }
    case Op::Kind::column_combine: {
      if (op.target == 0 || op.target >= cols || op.coefficients.size() != cols || !K.is_zero(op.coefficients[0]) ||
          K.is_zero(op.coefficients[op.target]))
        throw ArgumentError("invalid column combination");
      Column2<F> acc{Polynomial<F>(M.ring()), Polynomial<F>(M.ring())};
      for (std::size_t k = 1; k < cols; ++k)
        for (int r = 0; r < 2; ++r) acc[r] = acc[r] + M.entry(r, k).scaled(op.coefficients[k]);
      columns[op.target] = std::move(acc);
      break;
    }
    case Op::Kind::add_first:
      if (op.target == 0 || op.target >= cols) throw ArgumentError("invalid first-column addition");
      for (int r = 0; r < 2; ++r) columns[op.target][r] = columns[op.target][r] + M.entry(r, 0).scaled(op.scalar);
      break;
    case Op::Kind::permute: {
      const auto& p = op.permutation;
      std::vector<bool> seen(cols, false);
      if (p.size() != cols || p[0] != 0) throw ArgumentError("invalid column permutation");
      for (auto v : p) {
        if (v >= cols || seen[v]) throw ArgumentError("invalid column permutation");
        seen[v] = true;
      }
      for (std::size_t k = 0; k < cols; ++k) columns[k] = M.column(p[k]);
      break;
    }
  }
  return LinearMatrix<F>(M.ring(), std::move(columns));
}

namespace {

/// mu with b = mu * a, for a nonzero.
template <class F>
typename F::Element ratio(const Polynomial<F>& a, const Polynomial<F>& b) {
  const F& K = a.field();
  if (b.is_zero()) return K.zero();
  const auto mu = K.div(b.leading_coefficient(), a.leading_coefficient());
  if (!(a.scaled(mu) == b)) throw StructuralError("column entries are not proportional");
  return mu;
}

std::vector<std::size_t> range_from(std::size_t start, std::size_t end) {
  std::vector<std::size_t> v{0};
  for (std::size_t i = start; i < end; ++i) v.push_back(i);
  return v;
}

template <class F>
class Reducer {
 public:
  using E = typename F::Element;

  explicit Reducer(const LinearMatrix<F>& M) : cur_(M), K_(M.ring()->field()) {}

  CanonicalFormReport<F> run() {
    const std::size_t cols = cur_.num_columns();
    if (!realize(range_from(1, cols), 1)) return report(CanonicalType::T1);
    if (!realize(range_from(2, cols), 2)) return report(CanonicalType::T2);
    if (cur_.entry(0, 1).is_zero()) return report(CanonicalType::T3);
    // Column 1 is (alpha l, beta l) with alpha != 0; clear the bottom and
    // move the zero of column 2 into column 1.
    clear_bottom(1);
    emit(ElementaryOp<F>::permute_columns(swap_permutation(1, 2)));
    if (!realize(range_from(3, cols), 3)) return report(CanonicalType::T4);
    return finish();
  }

 private:
  void emit(ElementaryOp<F> op) {
    cur_ = apply(op, cur_);
    log_.push_back(std::move(op));
  }

  std::vector<std::size_t> swap_permutation(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> p(cur_.num_columns());
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[a], p[b]);
    return p;
  }

  /// Makes the bottom of column c zero with row2 <- row2 - mu * row1.
  void clear_bottom(std::size_t c) {
    const E mu = ratio(cur_.entry(0, c), cur_.entry(1, c));
    if (!K_.is_zero(mu)) emit(ElementaryOp<F>::row({K_.one(), K_.zero(), K_.neg(mu), K_.one()}));
  }

  /// Finds a generalized zero among the columns S (S[0] = 0) and turns it into
  /// a literal zero at the top of column `target`. False when S is 1-generic.
  bool realize(const std::vector<std::size_t>& S, std::size_t target) {
    const auto found = find_generalized_zero(cur_.ring(), cur_.select(S));
    if (found.status == ZeroSearch::none_absolutely) return false;
    if (found.status == ZeroSearch::none_over_base)
      throw ExtensionNeededError("a generalized zero exists only over an extension of " + K_.name() +
                                     "; binary form " + found.binary_form,
                                 found.binary_form);
    const auto& w = *found.witness;
    const std::size_t cols = cur_.num_columns();
    std::vector<E> coeff(cols, K_.zero());
    for (std::size_t k = 1; k < S.size(); ++k) coeff[S[k]] = w.c[k];
    std::size_t j = 0;
    for (std::size_t k = 1; k < S.size() && j == 0; ++k)
      if (!K_.is_zero(w.c[k])) j = S[k];
    if (j == 0) throw StructuralError("generalized zero supported on the first column");

    bool trivial = K_.is_one(coeff[j]);
    for (std::size_t k = 1; k < cols; ++k)
      if (k != j && !K_.is_zero(coeff[k])) trivial = false;
    if (!trivial) emit(ElementaryOp<F>::combine(j, coeff));
    if (!K_.is_zero(w.c[0])) emit(ElementaryOp<F>::add_first_column(j, w.c[0]));

    if (!K_.is_zero(w.s)) {
      if (!K_.is_one(w.s) || !K_.is_zero(w.t)) emit(ElementaryOp<F>::row({w.s, w.t, K_.zero(), K_.one()}));
    } else {
      emit(ElementaryOp<F>::row({w.s, w.t, K_.one(), K_.zero()}));
    }
    if (j != target) emit(ElementaryOp<F>::permute_columns(swap_permutation(j, target)));
    if (!cur_.entry(0, target).is_zero()) throw StructuralError("generalized zero did not become a literal zero");
    return true;
  }

  /// Columns 1 and 2 hold single linear forms up to scalars and column 3 has
  /// a zero on top. Ends in T3 or T5.
  CanonicalFormReport<F> finish() {
    const std::size_t cols = cur_.num_columns();
    auto zero_at = [&](std::size_t r, std::size_t c) { return cur_.entry(r, c).is_zero(); };
    auto to_front = [&](std::vector<std::size_t> front) {
      std::vector<std::size_t> p{0};
      p.insert(p.end(), front.begin(), front.end());
      for (std::size_t k = 1; k < cols; ++k)
        if (std::find(front.begin(), front.end(), k) == front.end()) p.push_back(k);
      std::vector<std::size_t> identity(cols);
      std::iota(identity.begin(), identity.end(), 0);
      if (p != identity) emit(ElementaryOp<F>::permute_columns(std::move(p)));
    };

    for (std::size_t c : {1, 2})
      if (zero_at(0, c)) {
        to_front({c, 3});
        return report(CanonicalType::T3);
      }
    std::vector<std::size_t> bottoms;
    for (std::size_t c : {1, 2, 3})
      if (zero_at(1, c)) bottoms.push_back(c);
    if (bottoms.size() >= 2) {
      emit(ElementaryOp<F>::row({K_.zero(), K_.one(), K_.one(), K_.zero()}));
      to_front({bottoms[0], bottoms[1]});
      return report(CanonicalType::T3);
    }

    std::size_t kb = zero_at(1, 1) ? 1 : 2;
    if (!zero_at(1, kb)) clear_bottom(kb);
    const std::size_t ko = kb == 1 ? 2 : 1;
    const E lambda = ratio(cur_.entry(0, ko), cur_.entry(1, ko));
    to_front({3, kb, ko});
    auto r = report(CanonicalType::T5);
    r.lambda = lambda;
    return r;
  }

  CanonicalFormReport<F> report(CanonicalType type) { return {type, cur_, log_, std::nullopt}; }

  LinearMatrix<F> cur_;
  const F& K_;
  ElementaryOpLog<F> log_;
};

}  // namespace

template <class F>
CanonicalFormReport<F> canonical_form(const LinearMatrix<F>& M) {
  const int h = height(ideal_from_minors(M));
  if (h != 2)
    throw PreconditionError("the ideal of minors has height " + std::to_string(h) + ", expected 2");
  return Reducer<F>(M).run();
}

template <class F>
bool satisfies_type(const CanonicalFormReport<F>& report) {
  const auto& M = report.matrix;
  const std::size_t cols = M.num_columns();
  auto zero_at = [&](std::size_t r, std::size_t c) { return c < cols && M.entry(r, c).is_zero(); };
  switch (report.type) {
    case CanonicalType::T1:
      return is_one_generic(M);
    case CanonicalType::T2:
      return zero_at(0, 1) && is_one_generic(M.ring(), M.select(range_from(2, cols)));
    case CanonicalType::T3:
      return zero_at(0, 1) && zero_at(0, 2);
    case CanonicalType::T4:
      return zero_at(0, 1) && zero_at(1, 2) && is_one_generic(M.ring(), M.select(range_from(3, cols)));
    case CanonicalType::T5:
      return cols >= 4 && report.lambda && zero_at(0, 1) && zero_at(1, 2) &&
             M.entry(1, 3) == M.entry(0, 3).scaled(*report.lambda);
  }
  return false;
}

#define PDQUAD_CANONICAL_INSTANTIATE(F)                                          \
  template struct ElementaryOp<F>;                                              \
  template LinearMatrix<F> apply(const ElementaryOp<F>&, const LinearMatrix<F>&); \
  template CanonicalFormReport<F> canonical_form(const LinearMatrix<F>&);        \
  template bool satisfies_type(const CanonicalFormReport<F>&);

PDQUAD_CANONICAL_INSTANTIATE(PrimeField)
PDQUAD_CANONICAL_INSTANTIATE(RationalField)

}  // namespace pdquad
