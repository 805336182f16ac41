#include "pdquad/resolution.hpp"

#include <algorithm>
#include <set>

#include "convert.hpp"

namespace pdquad {

BettiTable::BettiTable(std::map<std::pair<int, int>, long long> entries) {
  for (auto& [k, v] : entries)
    if (v != 0) entries_.emplace(k, v);
}

long long BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

long long BettiTable::total(int i) const {
  long long s = 0;
  for (const auto& [k, v] : entries_)
    if (k.first == i) s += v;
  return s;
}

int BettiTable::projective_dimension() const {
  int p = -1;
  for (const auto& [k, v] : entries_) p = std::max(p, k.first);
  return p;
}

std::vector<long long> BettiTable::hilbert_numerator() const {
  std::vector<long long> out{0};
  for (const auto& [k, v] : entries_) {
    const auto [i, j] = k;
    if (j < 0) throw StructuralError("negative internal degree");
    if (out.size() <= static_cast<std::size_t>(j)) out.resize(j + 1, 0);
    out[j] += (i % 2 ? -v : v);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

template <class F>
BettiTable FreeResolution<F>::betti() const {
  std::map<std::pair<int, int>, long long> e;
  for (std::size_t i = 0; i < modules_.size(); ++i)
    for (int t : modules_[i].twists) ++e[{static_cast<int>(i), t}];
  return BettiTable(std::move(e));
}

namespace {

template <class F>
using Vec = ModuleVector<F>;

/// Sort key for Schreyer frames: component ascending, then leading monomial
/// descending in lex. Ordered this way, successive frames lose variables from
/// their leading terms and the frame length stays within the variable count.
template <class F>
void sort_for_frame(std::vector<Vec<F>>& elems) {
  std::stable_sort(elems.begin(), elems.end(), [](const Vec<F>& a, const Vec<F>& b) {
    if (a.front().component != b.front().component) return a.front().component < b.front().component;
    return detail::lex_range(a.front().monomial, b.front().monomial, 0, a.front().monomial.num_variables()) > 0;
  });
}

template <class F>
SparseMatrix<F> to_matrix(const RingPtr<F>& ring, std::size_t rows, const std::vector<Vec<F>>& columns) {
  SparseMatrix<F> m(ring, rows, 0);
  for (const auto& v : columns) {
    std::map<std::size_t, std::vector<typename Polynomial<F>::Term>> parts;
    for (const auto& t : v) parts[t.component].push_back({t.monomial, t.coefficient});
    typename SparseMatrix<F>::Column col;
    for (auto& [r, terms] : parts) {
      Polynomial<F> p(ring, std::move(terms));
      if (!p.is_zero()) col.emplace(r, std::move(p));
    }
    m.append_column(std::move(col));
  }
  return m;
}

/// Column c of M as a module vector.
template <class F>
Vec<F> column_vector(const SparseMatrix<F>& M, std::size_t c, const detail::Engine<F>& engine,
                     std::uint32_t offset = 0) {
  Vec<F> v;
  for (const auto& [r, p] : M.column(c))
    for (const auto& t : p.terms())
      v.push_back(engine.make_term(t.monomial, static_cast<std::uint32_t>(r) + offset, t.coefficient));
  return engine.canonical(std::move(v));
}

/// Degree of column c under row twists, or nullopt for a zero column.
template <class F>
std::optional<int> column_degree(const SparseMatrix<F>& M, std::size_t c, const std::vector<int>& row_twists) {
  std::optional<int> deg;
  for (const auto& [r, p] : M.column(c)) {
    if (!p.is_homogeneous()) throw ArgumentError("syzygies need homogeneous matrix entries");
    const int d = p.degree() + row_twists.at(r);
    if (deg && *deg != d) throw ArgumentError("matrix column is not homogeneous for the given twists");
    deg = d;
  }
  return deg;
}

/// True iff v lies in the submodule whose Groebner basis is installed in `engine`.
template <class F>
bool reduces_to_zero(const detail::Engine<F>& engine, Vec<F> v) {
  return engine.reduce(std::move(v)).empty();
}

}  // namespace

template <class F>
FreeResolution<F> schreyer_resolution(const Ideal<F>& I) {
  const auto& ring = I.ring();
  if (!I.is_homogeneous()) throw ArgumentError("resolutions need homogeneous generators");
  if (I.is_unit()) throw PreconditionError("R/I is zero for the unit ideal");
  std::vector<GradedFreeModule> modules{GradedFreeModule{{0}}};
  std::vector<SparseMatrix<F>> differentials;
  if (I.is_zero()) return FreeResolution<F>(ring, std::move(modules), std::move(differentials), true);

  const F& K = ring->field();
  const MonomialOrder base = ring->order();
  ModuleOrder order_prev = ModuleOrder::ideal(base);
  std::vector<Vec<F>> elems;
  for (const auto& g : I.groebner().elements()) elems.push_back(detail::to_module(g, 0, order_prev));
  sort_for_frame<F>(elems);

  while (!elems.empty()) {
    const std::size_t prev_rank = modules.back().rank();
    GradedFreeModule Fk;
    std::vector<Monomial> taus;
    for (const auto& v : elems) {
      taus.push_back(v.front().key);
      Fk.twists.push_back(v.front().key.degree());
    }
    differentials.push_back(to_matrix(ring, prev_rank, elems));
    modules.push_back(Fk);

    const ModuleOrder order_k = ModuleOrder::schreyer(base, taus);
    detail::Engine<F> reducer(K, order_prev, false);
    reducer.set_basis(elems);
    const detail::Engine<F> builder(K, order_k, false);

    std::map<std::uint32_t, std::vector<std::size_t>> by_component;
    for (std::size_t i = 0; i < elems.size(); ++i) by_component[elems[i].front().component].push_back(i);

    std::vector<Vec<F>> next;
    for (const auto& [comp, idx] : by_component) {
      for (std::size_t a = 0; a < idx.size(); ++a) {
        const std::size_t i = idx[a];
        const auto& lead_i = elems[i].front();
        // Candidate leading monomials m_ji = lcm / LM(g_i) for j > i.
        std::vector<std::pair<Monomial, std::size_t>> cands;
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
          const std::size_t j = idx[b];
          cands.emplace_back(Monomial::lcm(lead_i.monomial, elems[j].front().monomial) / lead_i.monomial, j);
        }
        for (std::size_t c = 0; c < cands.size(); ++c) {
          bool redundant = false;
          for (std::size_t d = 0; d < cands.size() && !redundant; ++d) {
            if (d == c || !cands[d].first.divides(cands[c].first)) continue;
            redundant = !(cands[d].first == cands[c].first) || d < c;
          }
          if (redundant) continue;
          const std::size_t j = cands[c].second;
          const auto& lead_j = elems[j].front();
          const Monomial& m_ji = cands[c].first;
          const Monomial m_ij = Monomial::lcm(lead_i.monomial, lead_j.monomial) / lead_j.monomial;
          const auto ci = K.inv(lead_i.coefficient);
          const auto cj = K.neg(K.inv(lead_j.coefficient));
          Vec<F> s = reducer.add_multiple(Vec<F>{}, 0, ci, m_ji, elems[i], 0);
          s = reducer.add_multiple(s, 0, cj, m_ij, elems[j], 0);
          std::vector<typename detail::Engine<F>::Quotient> quotients;
          if (!reducer.reduce_recording(std::move(s), quotients).empty())
            throw StructuralError("Schreyer frame: S-vector did not reduce to zero");
          Vec<F> sigma;
          sigma.push_back(builder.make_term(m_ji, static_cast<std::uint32_t>(i), ci));
          sigma.push_back(builder.make_term(m_ij, static_cast<std::uint32_t>(j), cj));
          for (const auto& q : quotients)
            sigma.push_back(builder.make_term(q.monomial, static_cast<std::uint32_t>(q.index), K.neg(q.coefficient)));
          sigma = builder.canonical(std::move(sigma));
          next.push_back(std::move(sigma));
        }
      }
    }
    sort_for_frame<F>(next);
    elems = std::move(next);
    order_prev = order_k;
  }
  return FreeResolution<F>(ring, std::move(modules), std::move(differentials), false);
}

namespace {

/// Working copy of a complex for unit cancellation.
template <class F>
struct Complex {
  using Poly = Polynomial<F>;
  // cols[i][c]: column c of d_{i+1} (0-based level), row index rows[i][r].
  std::vector<std::vector<std::map<std::size_t, Poly>>> cols;
  std::vector<std::vector<std::set<std::size_t>>> rows;
  std::vector<std::vector<bool>> alive;  // per module

  void erase(std::size_t level, std::size_t r, std::size_t c) {
    cols[level][c].erase(r);
    rows[level][r].erase(c);
  }
  void put(std::size_t level, std::size_t r, std::size_t c, Poly p) {
    if (p.is_zero()) {
      erase(level, r, c);
      return;
    }
    cols[level][c].insert_or_assign(r, std::move(p));
    rows[level][r].insert(c);
  }
  void drop_row(std::size_t level, std::size_t r) {
    for (std::size_t c : rows[level][r]) cols[level][c].erase(r);
    rows[level][r].clear();
  }
  void drop_column(std::size_t level, std::size_t c) {
    for (const auto& [r, p] : cols[level][c]) rows[level][r].erase(c);
    cols[level][c].clear();
  }
};

}  // namespace

template <class F>
FreeResolution<F> minimize(const FreeResolution<F>& res) {
  const auto& ring = res.ring();
  const F& K = ring->field();
  const int p = res.length();
  Complex<F> cx;
  cx.cols.resize(p);
  cx.rows.resize(p);
  for (int i = 0; i <= p; ++i) cx.alive.emplace_back(res.module(i).rank(), true);
  for (int i = 1; i <= p; ++i) {
    const auto& d = res.differential(i);
    cx.cols[i - 1].resize(d.cols());
    cx.rows[i - 1].resize(d.rows());
    for (std::size_t c = 0; c < d.cols(); ++c)
      for (const auto& [r, poly] : d.column(c)) cx.put(i - 1, r, c, poly);
  }

  for (int i = 1; i <= p; ++i) {
    const std::size_t L = static_cast<std::size_t>(i - 1);
    const auto& row_tw = res.module(i - 1).twists;
    const auto& col_tw = res.module(i).twists;
    // One pass over rows suffices: a cancellation can only create a unit in
    // a row that already held one.
    for (std::size_t r = 0; r < row_tw.size(); ++r) {
      if (!cx.alive[i - 1][r]) continue;
      std::optional<std::size_t> unit_col;
      for (std::size_t c : cx.rows[L][r]) {
        if (col_tw[c] != row_tw[r]) continue;
        const auto& e = cx.cols[L][c].at(r);
        if (e.is_constant()) {
          unit_col = c;
          break;
        }
      }
      if (!unit_col) continue;
      const std::size_t c = *unit_col;
      const auto u_inv = K.inv(cx.cols[L][c].at(r).leading_coefficient());
      std::vector<std::pair<std::size_t, Polynomial<F>>> col_c;
      for (const auto& [rr, e] : cx.cols[L][c])
        if (rr != r) col_c.emplace_back(rr, e);
      std::vector<std::pair<std::size_t, Polynomial<F>>> row_r;
      for (std::size_t cc : cx.rows[L][r])
        if (cc != c) row_r.emplace_back(cc, cx.cols[L][cc].at(r).scaled(u_inv));
      for (const auto& [cc, factor] : row_r)
        for (const auto& [rr, b] : col_c) {
          auto it = cx.cols[L][cc].find(rr);
          Polynomial<F> updated = (it == cx.cols[L][cc].end() ? Polynomial<F>(ring) : it->second) - b * factor;
          cx.put(L, rr, cc, std::move(updated));
        }
      cx.drop_column(L, c);
      cx.drop_row(L, r);
      cx.alive[i][c] = false;
      cx.alive[i - 1][r] = false;
      if (i < p) cx.drop_row(L + 1, c);
      if (i > 1) cx.drop_column(L - 1, r);
    }
  }

  // Compact.
  std::vector<std::vector<std::size_t>> index(p + 1);
  std::vector<GradedFreeModule> modules(p + 1);
  for (int i = 0; i <= p; ++i) {
    index[i].assign(res.module(i).rank(), SIZE_MAX);
    for (std::size_t b = 0; b < res.module(i).rank(); ++b)
      if (cx.alive[i][b]) {
        index[i][b] = modules[i].rank();
        modules[i].twists.push_back(res.module(i).twists[b]);
      }
  }
  int q = p;
  while (q > 0 && modules[q].rank() == 0) --q;
  modules.resize(q + 1);
  std::vector<SparseMatrix<F>> diffs;
  for (int i = 1; i <= q; ++i) {
    SparseMatrix<F> m(ring, modules[i - 1].rank(), 0);
    for (std::size_t c = 0; c < cx.cols[i - 1].size(); ++c) {
      if (!cx.alive[i][c]) continue;
      typename SparseMatrix<F>::Column col;
      for (const auto& [r, e] : cx.cols[i - 1][c]) col.emplace(index[i - 1][r], e);
      m.append_column(std::move(col));
    }
    diffs.push_back(std::move(m));
  }
  return FreeResolution<F>(ring, std::move(modules), std::move(diffs), true);
}

template <class F>
FreeResolution<F> minimal_free_resolution(const Ideal<F>& I) {
  return minimize(schreyer_resolution(I));
}

template <class F>
int projective_dimension(const Ideal<F>& I) {
  return minimal_free_resolution(I).length();
}

template <class F>
bool is_socle_element(const Polynomial<F>& f, const Ideal<F>& I) {
  require_same_ring(f.ring(), I.ring());
  if (I.contains(f)) return false;
  for (std::size_t v = 0; v < f.ring()->num_variables(); ++v)
    if (!I.contains(Polynomial<F>::variable(f.ring(), v) * f)) return false;
  return true;
}

template <class F>
SparseMatrix<F> syzygies(const SparseMatrix<F>& M, const std::vector<int>& row_twists) {
  const auto& ring = M.ring();
  const std::size_t rows = M.rows(), cols = M.cols();
  if (row_twists.size() != rows) throw StructuralError("one twist per matrix row is required");
  std::vector<int> twists = row_twists;
  for (std::size_t c = 0; c < cols; ++c) twists.push_back(column_degree(M, c, row_twists).value_or(0));
  const ModuleOrder order = ModuleOrder::position_over_term(ring->order(), twists);
  detail::Engine<F> engine(ring->field(), order, false);
  std::vector<Vec<F>> gens;
  for (std::size_t c = 0; c < cols; ++c) {
    Vec<F> v = column_vector(M, c, engine);
    v.push_back(engine.make_term(ring->one(), static_cast<std::uint32_t>(rows + c), ring->field().one()));
    gens.push_back(engine.canonical(std::move(v)));
  }
  engine.run(gens);

  // Elements free of the original rows, shifted down.
  const ModuleOrder sub_order = ModuleOrder::position_over_term(
      ring->order(), std::vector<int>(twists.begin() + static_cast<std::ptrdiff_t>(rows), twists.end()));
  std::vector<std::pair<int, Vec<F>>> found;
  for (const auto& v : engine.basis()) {
    if (v.front().component < rows) continue;
    Vec<F> w;
    for (const auto& t : v) {
      const auto comp = static_cast<std::uint32_t>(t.component - rows);
      w.push_back({t.monomial, sub_order.key(t.monomial, comp), comp, t.coefficient});
    }
    found.emplace_back(sub_order.degree(w.front().monomial, w.front().component), std::move(w));
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  // Prune to a minimal generating set, degree by degree.
  std::vector<Vec<F>> kept;
  for (auto& [deg, v] : found) {
    if (!kept.empty()) {
      detail::Engine<F> span(ring->field(), sub_order, false);
      span.run(kept);
      if (reduces_to_zero(span, v)) continue;
    }
    kept.push_back(std::move(v));
  }
  return to_matrix(ring, cols, kept);
}

template <class F>
bool composes_to_zero(const FreeResolution<F>& res) {
  for (int i = 1; i < res.length(); ++i)
    if (!(res.differential(i) * res.differential(i + 1)).is_zero()) return false;
  return true;
}

template <class F>
bool has_no_units(const FreeResolution<F>& res) {
  for (int i = 1; i <= res.length(); ++i) {
    const auto& d = res.differential(i);
    for (std::size_t c = 0; c < d.cols(); ++c)
      for (const auto& [r, e] : d.column(c))
        if (e.is_constant()) return false;
  }
  return true;
}

template <class F>
bool is_graded(const FreeResolution<F>& res) {
  for (int i = 1; i <= res.length(); ++i) {
    const auto& d = res.differential(i);
    for (std::size_t c = 0; c < d.cols(); ++c)
      for (const auto& [r, e] : d.column(c))
        if (!e.is_homogeneous_of_degree(res.module(i).twists[c] - res.module(i - 1).twists[r])) return false;
  }
  return true;
}

template <class F>
bool is_exact(const FreeResolution<F>& res) {
  if (!composes_to_zero(res)) return false;
  const auto& ring = res.ring();
  for (int i = 1; i <= res.length(); ++i) {
    const auto& d = res.differential(i);
    SparseMatrix<F> kernel = syzygies(d, res.module(i - 1).twists);
    if (kernel.cols() == 0) continue;
    if (i == res.length()) return false;
    const auto& next = res.differential(i + 1);
    const ModuleOrder order = ModuleOrder::position_over_term(ring->order(), res.module(i).twists);
    detail::Engine<F> image(ring->field(), order, false);
    std::vector<Vec<F>> gens;
    for (std::size_t c = 0; c < next.cols(); ++c) gens.push_back(column_vector(next, c, image));
    image.run(gens);
    detail::Engine<F> shaper(ring->field(), order, false);
    for (std::size_t c = 0; c < kernel.cols(); ++c)
      if (!reduces_to_zero(image, column_vector(kernel, c, shaper))) return false;
  }
  return true;
}

template <class F>
bool exactness_spot_check(const FreeResolution<F>& res, std::mt19937_64& rng) {
  const int p = res.length();
  if (p == 0) return true;
  const auto& ring = res.ring();
  const F& K = ring->field();
  constexpr int kAttempts = 4;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<typename F::Element> point;
    for (std::size_t v = 0; v < ring->num_variables(); ++v) point.push_back(K.random(rng));
    std::vector<std::size_t> ranks(p + 2, 0);
    for (int i = 1; i <= p; ++i) ranks[i] = rank(K, res.differential(i).evaluate(point));
    bool ok = true;
    for (int i = 0; i <= p && ok; ++i) ok = ranks[i] + ranks[i + 1] == res.module(i).rank();
    if (ok) return true;
  }
  return is_exact(res);
}

#define PDQUAD_INSTANTIATE(F)                                                      \
  template class FreeResolution<F>;                                                \
  template FreeResolution<F> schreyer_resolution(const Ideal<F>&);                 \
  template FreeResolution<F> minimize(const FreeResolution<F>&);                   \
  template FreeResolution<F> minimal_free_resolution(const Ideal<F>&);             \
  template int projective_dimension(const Ideal<F>&);                              \
  template bool is_socle_element(const Polynomial<F>&, const Ideal<F>&);           \
  template SparseMatrix<F> syzygies(const SparseMatrix<F>&, const std::vector<int>&); \
  template bool composes_to_zero(const FreeResolution<F>&);                        \
  template bool has_no_units(const FreeResolution<F>&);                            \
  template bool is_graded(const FreeResolution<F>&);                               \
  template bool exactness_spot_check(const FreeResolution<F>&, std::mt19937_64&);  \
  template bool is_exact(const FreeResolution<F>&);

PDQUAD_INSTANTIATE(PrimeField)
PDQUAD_INSTANTIATE(RationalField)

}  // namespace pdquad
