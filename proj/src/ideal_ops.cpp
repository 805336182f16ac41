#include <algorithm>

#include "convert.hpp"
#include "pdquad/ideal.hpp"

namespace pdquad {

template <class F>
Ideal<F> ideal_intersect(const Ideal<F>& I, const Ideal<F>& J) {
  require_same_ring(I.ring(), J.ring());
  const auto& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal<F>(ring);
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;

  // Work in K[t, x...] with t eliminated first and carrying weight zero, so
  // t*I + (1-t)*J stays homogeneous when I and J are.
  const std::size_t n = ring->num_variables();
  if (n + 1 > kMaxVariables) throw UnsupportedError("intersection needs one spare variable");
  const std::size_t total = n + 1;
  std::vector<int> weights(total, 1);
  weights[0] = 0;
  ModuleOrder order = ModuleOrder::ideal(MonomialOrder{ring->order().kind, 1});
  order.with_weights(weights);
  const F& K = ring->field();
  detail::Engine<F> engine(K, order, true);

  const Monomial t = Monomial::variable(total, 0);
  auto lift = [&](const Polynomial<F>& f, bool times_t, bool negate) {
    ModuleVector<F> v;
    for (const auto& term : f.terms()) {
      Monomial m = detail::shift_monomial(term.monomial, 1, total);
      if (times_t) m = m * t;
      v.push_back(engine.make_term(m, 0, negate ? K.neg(term.coefficient) : term.coefficient));
    }
    return v;
  };

  std::vector<ModuleVector<F>> gens;
  for (const auto& f : I.generators()) gens.push_back(engine.canonical(lift(f, true, false)));
  for (const auto& g : J.generators()) {
    auto v = lift(g, false, false);
    auto w = lift(g, true, true);
    v.insert(v.end(), w.begin(), w.end());
    gens.push_back(engine.canonical(std::move(v)));
  }
  engine.run(gens);

  std::vector<Polynomial<F>> out;
  for (const auto& v : engine.basis()) {
    if (v.front().monomial.exponent(0) != 0) continue;
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& term : v) terms.push_back({detail::unshift_monomial(term.monomial, 1), term.coefficient});
    out.emplace_back(ring, std::move(terms));
  }
  return Ideal<F>(ring, std::move(out));
}

template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& f, const Polynomial<F>& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw ArgumentError("division by the zero polynomial");
  const auto& K = f.field();
  Polynomial<F> r = f;
  std::vector<typename Polynomial<F>::Term> q;
  while (!r.is_zero()) {
    const auto& lt = r.leading_term();
    if (!g.leading_monomial().divides(lt.monomial))
      throw ArgumentError(g.to_string() + " does not divide " + f.to_string());
    Monomial m = lt.monomial / g.leading_monomial();
    auto c = K.div(lt.coefficient, g.leading_coefficient());
    r = r - g.times_term(m, c);
    q.push_back({std::move(m), std::move(c)});
  }
  return Polynomial<F>(f.ring(), std::move(q));
}

template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Polynomial<F>& g) {
  require_same_ring(I.ring(), g.ring());
  if (g.is_zero()) throw ArgumentError("quotient by the zero ideal");
  if (I.is_zero()) return I;
  Ideal<F> meet = ideal_intersect(I, Ideal<F>(I.ring(), {g}));
  std::vector<Polynomial<F>> gens;
  for (const auto& h : meet.generators()) gens.push_back(divide_exact(h, g));
  return Ideal<F>(I.ring(), std::move(gens));
}

template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Ideal<F>& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) throw ArgumentError("quotient by the zero ideal");
  std::optional<Ideal<F>> acc;
  for (const auto& g : J.generators()) {
    Ideal<F> q = ideal_quotient(I, g);
    acc = acc ? ideal_intersect(*acc, q) : q;
  }
  return *acc;
}

template <class F>
bool is_regular_sequence(const std::vector<Polynomial<F>>& fs) {
  if (fs.empty()) return true;
  const auto& ring = fs.front().ring();
  Ideal<F> prefix(ring);
  for (const auto& f : fs) {
    if (f.is_zero()) return false;
    if (!prefix.is_zero()) {
      if (!(ideal_quotient(prefix, f) == prefix)) return false;
    }
    auto gens = prefix.generators();
    gens.push_back(f);
    prefix = Ideal<F>(ring, std::move(gens));
  }
  return !prefix.is_unit();
}

template <class F>
std::vector<Polynomial<F>> minimal_generators(const Ideal<F>& I) {
  auto gens = I.generators();
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial<F>& a, const Polynomial<F>& b) { return a.degree() < b.degree(); });
  std::vector<Polynomial<F>> kept;
  for (auto& g : gens) {
    if (!kept.empty() && Ideal<F>(I.ring(), kept).contains(g)) continue;
    kept.push_back(std::move(g));
  }
  return kept;
}

#define PDQUAD_INSTANTIATE(F)                                                          \
  template Ideal<F> ideal_intersect(const Ideal<F>&, const Ideal<F>&);                 \
  template Ideal<F> ideal_quotient(const Ideal<F>&, const Polynomial<F>&);             \
  template Ideal<F> ideal_quotient(const Ideal<F>&, const Ideal<F>&);                  \
  template Polynomial<F> divide_exact(const Polynomial<F>&, const Polynomial<F>&);     \
  template bool is_regular_sequence(const std::vector<Polynomial<F>>&);                \
  template std::vector<Polynomial<F>> minimal_generators(const Ideal<F>&);

PDQUAD_INSTANTIATE(PrimeField)
PDQUAD_INSTANTIATE(RationalField)

}  // namespace pdquad
