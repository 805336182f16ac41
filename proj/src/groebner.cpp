#include "convert.hpp"
#include "pdquad/ideal.hpp"

namespace pdquad {

template <class F>
GroebnerBasis<F> groebner(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& generators,
                          const GroebnerOptions& options) {
  const ModuleOrder order = ModuleOrder::ideal(ring->order());
  detail::Engine<F> engine(ring->field(), order, true);
  std::vector<ModuleVector<F>> gens;
  for (const auto& g : generators) {
    require_same_ring(ring, g.ring());
    if (!g.is_zero()) gens.push_back(detail::to_module(g, 0, order));
  }
  detail::EngineOptions eo;
  eo.degree_bound = options.degree_bound;
  engine.run(gens, eo);
  std::vector<Polynomial<F>> elements;
  for (const auto& v : engine.basis()) elements.push_back(detail::ideal_element(ring, v));
  return GroebnerBasis<F>(ring, std::move(elements));
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G) {
  require_same_ring(f.ring(), G.ring());
  if (f.is_zero() || G.size() == 0) return f;
  const ModuleOrder order = ModuleOrder::ideal(G.order());
  detail::Engine<F> engine(f.field(), order, true);
  std::vector<ModuleVector<F>> basis;
  for (const auto& g : G.elements()) basis.push_back(detail::to_module(g, 0, order));
  engine.set_basis(std::move(basis));
  return detail::ideal_element(f.ring(), engine.reduce(detail::to_module(f, 0, order)));
}

template GroebnerBasis<PrimeField> groebner(const RingPtr<PrimeField>&,
                                            const std::vector<Polynomial<PrimeField>>&,
                                            const GroebnerOptions&);
template GroebnerBasis<RationalField> groebner(const RingPtr<RationalField>&,
                                               const std::vector<Polynomial<RationalField>>&,
                                               const GroebnerOptions&);
template Polynomial<PrimeField> normal_form(const Polynomial<PrimeField>&, const GroebnerBasis<PrimeField>&);
template Polynomial<RationalField> normal_form(const Polynomial<RationalField>&,
                                               const GroebnerBasis<RationalField>&);

}  // namespace pdquad
