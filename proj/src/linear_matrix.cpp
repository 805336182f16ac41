#include "pdquad/linear_matrix.hpp"

#include <algorithm>
#include <functional>

#include "pdquad/linalg.hpp"

namespace pdquad {
namespace {

template <class F>
void require_linear(const Polynomial<F>& p) {
  if (!p.is_zero() && !p.is_homogeneous_of_degree(1))
    throw ArgumentError("matrix entry is not a linear form: " + p.to_string());
}

template <class F>
std::vector<typename F::Element> coefficient_row(const Polynomial<F>& p) {
  return p.linear_coefficients();
}

/// Column-style Hermite reduction over F[tau] of the m x N matrix A + tau*B;
/// the product of the diagonal is the gcd of the maximal minors up to a unit.
template <class F>
UPoly<F> maximal_minor_gcd(const F& K, const std::vector<std::vector<typename F::Element>>& A,
                           const std::vector<std::vector<typename F::Element>>& B, std::size_t N) {
  const std::size_t m = A.size();
  std::vector<std::vector<UPoly<F>>> C(m, std::vector<UPoly<F>>(N));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < N; ++c) C[r][c] = UPoly<F>::linear(K, A[r][c], B[r][c]);

  UPoly<F> product = UPoly<F>::constant(K, K.one());
  for (std::size_t i = 0; i < m; ++i) {
    for (;;) {
      std::size_t best = N;
      for (std::size_t k = i; k < N; ++k)
        if (!C[i][k].is_zero() && (best == N || C[i][k].degree() < C[i][best].degree())) best = k;
      if (best == N) return {};
      if (best != i)
        for (std::size_t r = 0; r < m; ++r) std::swap(C[r][i], C[r][best]);
      bool done = true;
      for (std::size_t k = i + 1; k < N; ++k) {
        if (C[i][k].is_zero()) continue;
        const UPoly<F> q = C[i][k].divmod(C[i][i], K).first;
        for (std::size_t r = i; r < m; ++r) C[r][k] = C[r][k].sub(q.mul(C[r][i], K), K);
        if (!C[i][k].is_zero()) done = false;
      }
      if (done) break;
    }
    product = product.mul(C[i][i], K);
  }
  return product.monic(K);
}

template <class F>
std::string binary_form_text(const UPoly<F>& h, const F& K) {
  if (h.is_zero()) return "0";
  const int d = h.degree();
  std::string s;
  for (int i = 0; i <= d; ++i) {
    const auto& c = h.coefficients()[i];
    if (K.is_zero(c)) continue;
    std::string cs = K.to_string(c);
    const bool neg = cs[0] == '-';
    if (neg) cs.erase(0, 1);
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    auto power = [](const char* v, int e) {
      return e == 0 ? std::string() : (e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e));
    };
    const std::string ps = power("s", d - i), pt = power("t", i);
    mono = ps.empty() ? pt : (pt.empty() ? ps : ps + "*" + pt);
    if (mono.empty()) s += cs;
    else if (cs == "1") s += mono;
    else s += cs + "*" + mono;
  }
  return s;
}

template <class F>
Polynomial<F> determinant(const RingPtr<F>& ring, const std::vector<std::vector<Polynomial<F>>>& rows,
                          const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
  if (r.size() == 1) return rows[r[0]][c[0]];
  Polynomial<F> acc(ring);
  std::vector<std::size_t> rest(r.begin() + 1, r.end());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto& a = rows[r[0]][c[k]];
    if (a.is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t l = 0; l < c.size(); ++l)
      if (l != k) cols.push_back(c[l]);
    Polynomial<F> term = a * determinant(ring, rows, rest, cols);
    acc = k % 2 ? acc - term : acc + term;
  }
  return acc;
}

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

template <class F>
LinearMatrix<F>::LinearMatrix(RingPtr<F> ring, std::vector<Column2<F>> columns)
    : ring_(std::move(ring)), columns_(std::move(columns)) {
  if (columns_.empty()) throw ArgumentError("a linear matrix needs the first column (x, y)");
  for (const auto& col : columns_)
    for (const auto& p : col) {
      require_same_ring(ring_, p.ring());
      require_linear(p);
    }
  const F& K = ring_->field();
  const std::size_t N = ring_->num_variables();
  if (x().is_zero() || y().is_zero()) throw ArgumentError("the first column must hold two independent linear forms");
  DenseMatrix<F> m(K, 2, N);
  auto cx = coefficient_row(x()), cy = coefficient_row(y());
  for (std::size_t i = 0; i < N; ++i) {
    m(0, i) = cx[i];
    m(1, i) = cy[i];
  }
  if (rank(K, m) != 2) throw ArgumentError("the first column must hold two independent linear forms");
}

template <class F>
LinearMatrix<F> LinearMatrix<F>::from_rows(RingPtr<F> ring, const std::vector<Poly>& top,
                                           const std::vector<Poly>& bottom) {
  if (top.size() != bottom.size()) throw ArgumentError("matrix rows have different lengths");
  std::vector<Column2<F>> cols;
  for (std::size_t i = 0; i < top.size(); ++i) cols.push_back({top[i], bottom[i]});
  return LinearMatrix(std::move(ring), std::move(cols));
}

template <class F>
std::vector<Column2<F>> LinearMatrix<F>::select(const std::vector<std::size_t>& indices) const {
  std::vector<Column2<F>> out;
  for (auto i : indices) out.push_back(columns_.at(i));
  return out;
}

template <class F>
std::string LinearMatrix<F>::to_string() const {
  std::string s;
  for (int r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < columns_.size(); ++c) s += (c ? ", " : "") + columns_[c][r].to_string();
    if (r == 0) s += "\n";
  }
  return s;
}

template <class F>
GeneralizedZeroResult<F> find_generalized_zero(const RingPtr<F>& ring, const std::vector<Column2<F>>& columns) {
  using E = typename F::Element;
  const F& K = ring->field();
  const std::size_t m = columns.size(), N = ring->num_variables();
  std::vector<std::vector<E>> A, B;
  for (const auto& col : columns) {
    require_linear(col[0]);
    require_linear(col[1]);
    A.push_back(coefficient_row(col[0]));
    B.push_back(coefficient_row(col[1]));
  }

  auto C_at = [&](const E& s, const E& t) {
    DenseMatrix<F> C(K, m, N);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < N; ++c) C(r, c) = K.add(K.mul(s, A[r][c]), K.mul(t, B[r][c]));
    return C;
  };
  auto unit_vector = [&](std::size_t j) {
    std::vector<E> c(m, K.zero());
    c[j] = K.one();
    return c;
  };
  auto from_kernel = [&](const E& s, const E& t) -> std::optional<GeneralizedZeroWitness<F>> {
    auto ker = left_kernel(K, C_at(s, t));
    if (ker.empty()) return std::nullopt;
    return GeneralizedZeroWitness<F>{s, t, std::move(ker.front())};
  };

  GeneralizedZeroResult<F> result{ZeroSearch::none_absolutely, std::nullopt, ""};
  if (m == 0) {
    result.binary_form = "1";
    return result;
  }
  const UPoly<F> h = maximal_minor_gcd(K, A, B, N);
  result.binary_form = binary_form_text(h, K);

  auto found = [&](GeneralizedZeroWitness<F> w) {
    result.status = ZeroSearch::witness;
    result.witness = std::move(w);
    return result;
  };

  for (std::size_t j = 0; j < m; ++j)
    if (columns[j][0].is_zero()) return found({K.one(), K.zero(), unit_vector(j)});
  if (h.is_zero()) {
    if (auto w = from_kernel(K.one(), K.zero())) return found(std::move(*w));
    throw StructuralError("rank-deficient pencil without a kernel at (1:0)");
  }
  for (std::size_t j = 0; j < m; ++j)
    if (columns[j][1].is_zero()) return found({K.zero(), K.one(), unit_vector(j)});
  for (const auto& tau : roots(h, K))
    if (auto w = from_kernel(K.one(), tau)) return found(std::move(*w));
  if (auto w = from_kernel(K.zero(), K.one())) return found(std::move(*w));
  result.status = h.degree() >= 1 ? ZeroSearch::none_over_base : ZeroSearch::none_absolutely;
  return result;
}

template <class F>
Polynomial<F> witness_residual(const RingPtr<F>& ring, const std::vector<Column2<F>>& columns,
                               const GeneralizedZeroWitness<F>& w) {
  if (w.c.size() != columns.size()) throw ArgumentError("witness has the wrong number of column coefficients");
  Polynomial<F> acc(ring);
  for (std::size_t j = 0; j < columns.size(); ++j)
    acc = acc + (columns[j][0].scaled(w.s) + columns[j][1].scaled(w.t)).scaled(w.c[j]);
  return acc;
}

template <class F>
Ideal<F> ideal_from_minors(const LinearMatrix<F>& M) {
  std::vector<Polynomial<F>> gens;
  for (std::size_t j = 1; j < M.num_columns(); ++j) gens.push_back(M.x() * M.entry(1, j) - M.y() * M.entry(0, j));
  return Ideal<F>(M.ring(), std::move(gens));
}

template <class F>
Ideal<F> all_minors(const LinearMatrix<F>& M) {
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < M.num_columns(); ++i)
    for (std::size_t j = i + 1; j < M.num_columns(); ++j)
      gens.push_back(M.entry(0, i) * M.entry(1, j) - M.entry(1, i) * M.entry(0, j));
  return Ideal<F>(M.ring(), std::move(gens));
}

template <class F>
Ideal<F> minors_ideal(const RingPtr<F>& ring, const std::vector<std::vector<Polynomial<F>>>& rows, std::size_t k) {
  if (rows.empty() || k == 0) return Ideal<F>::unit(ring);
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw ArgumentError("matrix rows have different lengths");
  std::vector<Polynomial<F>> gens;
  subsets(rows.size(), k, [&](const std::vector<std::size_t>& rs) {
    subsets(cols, k, [&](const std::vector<std::size_t>& cs) { gens.push_back(determinant(ring, rows, rs, cs)); });
  });
  return Ideal<F>(ring, std::move(gens));
}

template <class F>
LinearMatrix<F> represent_by_coefficients(const std::vector<Polynomial<F>>& quadrics, const Polynomial<F>& x,
                                          const Polynomial<F>& y) {
  using E = typename F::Element;
  const RingPtr<F>& ring = x.ring();
  require_same_ring(ring, y.ring());
  const F& K = ring->field();
  const std::size_t N = ring->num_variables();
  if (!x.is_homogeneous_of_degree(1) || !y.is_homogeneous_of_degree(1) || x.is_zero() || y.is_zero())
    throw ArgumentError("x and y must be nonzero linear forms");

  // New coordinates z = T X: z_i = x, z_j = y - c*x, the rest unchanged.
  const auto px = x.linear_coefficients(), py = y.linear_coefficients();
  std::size_t i = 0;
  while (K.is_zero(px[i])) ++i;
  const E c = K.div(py[i], px[i]);
  std::vector<E> yp(N);
  for (std::size_t k = 0; k < N; ++k) yp[k] = K.sub(py[k], K.mul(c, px[k]));
  std::size_t j = 0;
  while (j < N && K.is_zero(yp[j])) ++j;
  if (j == N) throw ArgumentError("x and y are linearly dependent");

  DenseMatrix<F> aug(K, N, 2 * N);
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t k = 0; k < N; ++k)
      aug(r, k) = r == i ? px[k] : r == j ? yp[k] : (r == k ? K.one() : K.zero());
    aug(r, N + r) = K.one();
  }
  std::vector<Polynomial<F>> forward(N, Polynomial<F>(ring)), backward(N, Polynomial<F>(ring));
  for (std::size_t r = 0; r < N; ++r) {
    std::vector<E> row(N);
    for (std::size_t k = 0; k < N; ++k) row[k] = aug(r, k);
    forward[r] = Polynomial<F>::linear_form(ring, row);
  }
  const auto pivots = row_reduce(K, aug);
  if (pivots.size() != N || pivots.back() >= N)
    throw StructuralError("coordinate change is not invertible");
  for (std::size_t r = 0; r < N; ++r) {
    std::vector<E> row(N);
    for (std::size_t k = 0; k < N; ++k) row[k] = aug(r, N + k);
    backward[r] = Polynomial<F>::linear_form(ring, row);
  }

  std::vector<Column2<F>> cols{{x, y}};
  for (const auto& q : quadrics) {
    require_same_ring(ring, q.ring());
    if (!q.is_zero() && !q.is_homogeneous_of_degree(2)) throw ArgumentError("not a quadric: " + q.to_string());
    const Polynomial<F> qz = q.substitute(backward);
    std::vector<typename Polynomial<F>::Term> u_terms, v_terms;
    for (const auto& t : qz.terms()) {
      if (t.monomial.exponent(i) > 0) {
        Monomial m = t.monomial;
        m.set_exponent(i, m.exponent(i) - 1);
        u_terms.push_back({m, t.coefficient});
      } else if (t.monomial.exponent(j) > 0) {
        Monomial m = t.monomial;
        m.set_exponent(j, m.exponent(j) - 1);
        v_terms.push_back({m, t.coefficient});
      } else {
        throw RepresentationError(q.to_string() + " does not lie in (" + x.to_string() + ", " + y.to_string() + ")");
      }
    }
    const Polynomial<F> u = Polynomial<F>(ring, std::move(u_terms)).substitute(forward);
    const Polynomial<F> v = Polynomial<F>(ring, std::move(v_terms)).substitute(forward);
    // q = x*u + (y - c*x)*v = x*(u - c*v) + y*v.
    cols.push_back({-v, u - v.scaled(c)});
  }
  return LinearMatrix<F>(ring, std::move(cols));
}

template <class F>
bool cramer_containment(const Ideal<F>& I, const LinearMatrix<F>& M) {
  const Ideal<F> colon = ideal_quotient(I, Ideal<F>(M.ring(), {M.x(), M.y()}));
  return colon.contains(all_minors(M));
}

#define PDQUAD_LINEAR_MATRIX_INSTANTIATE(F)                                                                   \
  template class LinearMatrix<F>;                                                                             \
  template GeneralizedZeroResult<F> find_generalized_zero(const RingPtr<F>&, const std::vector<Column2<F>>&); \
  template Polynomial<F> witness_residual(const RingPtr<F>&, const std::vector<Column2<F>>&,                  \
                                          const GeneralizedZeroWitness<F>&);                                  \
  template Ideal<F> ideal_from_minors(const LinearMatrix<F>&);                                                \
  template Ideal<F> all_minors(const LinearMatrix<F>&);                                                       \
  template Ideal<F> minors_ideal(const RingPtr<F>&, const std::vector<std::vector<Polynomial<F>>>&,          \
                                 std::size_t);                                                                \
  template LinearMatrix<F> represent_by_coefficients(const std::vector<Polynomial<F>>&, const Polynomial<F>&, \
                                                     const Polynomial<F>&);                                   \
  template bool cramer_containment(const Ideal<F>&, const LinearMatrix<F>&);

PDQUAD_LINEAR_MATRIX_INSTANTIATE(PrimeField)
PDQUAD_LINEAR_MATRIX_INSTANTIATE(RationalField)

}  // namespace pdquad
