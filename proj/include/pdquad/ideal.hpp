#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pdquad/polynomial.hpp"

namespace pdquad {

/// Reduced Groebner basis of an ideal with respect to its ring's order.
/// Elements are monic and sorted ascending by leading monomial.
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<F> ring, std::vector<Polynomial<F>> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingPtr<F>& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return ring_->order(); }
  const std::vector<Polynomial<F>>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// True iff the basis is {1}.
  bool is_unit() const noexcept { return elements_.size() == 1 && elements_[0].is_constant(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : elements_) out.push_back(g.leading_monomial());
    return out;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.elements_ == b.elements_;
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> elements_;
};

struct GroebnerOptions {
  /// Truncate at this degree (homogeneous input only).
  std::optional<int> degree_bound;
};

template <class F>
GroebnerBasis<F> groebner(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& generators,
                          const GroebnerOptions& options = {});

/// Remainder of `f` modulo `G`: no term is divisible by a leading monomial of G.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G);

/// An ideal given by generators, with its reduced Groebner basis computed on
/// first use and shared between copies.
template <class F>
class Ideal {
 public:
  explicit Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators = {})
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      require_same_ring(ring_, g.ring());
      if (!g.is_zero()) generators_.push_back(std::move(g));
    }
  }

  static Ideal unit(RingPtr<F> ring) {
    auto one = Polynomial<F>::constant(ring, 1);
    return Ideal(std::move(ring), {one});
  }

  const RingPtr<F>& ring() const noexcept { return ring_; }
  const std::vector<Polynomial<F>>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }

  const GroebnerBasis<F>& groebner() const {
    std::call_once(cache_->once, [this] { cache_->basis.emplace(pdquad::groebner(ring_, generators_)); });
    return *cache_->basis;
  }

  bool is_unit() const { return groebner().is_unit(); }
  bool is_homogeneous() const {
    for (const auto& g : generators_)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  bool contains(const Polynomial<F>& f) const { return normal_form(f, groebner()).is_zero(); }
  bool contains(const Ideal& J) const {
    for (const auto& g : J.generators_)
      if (!contains(g)) return false;
    return true;
  }

  /// Equality as ideals (identical reduced bases).
  friend bool operator==(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_);
    return a.groebner() == b.groebner();
  }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_);
    auto gens = a.generators_;
    gens.insert(gens.end(), b.generators_.begin(), b.generators_.end());
    return Ideal(a.ring_, std::move(gens));
  }
  friend Ideal operator*(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_);
    std::vector<Polynomial<F>> gens;
    for (const auto& f : a.generators_)
      for (const auto& g : b.generators_) gens.push_back(f * g);
    return Ideal(a.ring_, std::move(gens));
  }

  /// Generators as a comma separated list, as in the document format.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? ", " : "") + generators_[i].to_string();
    return s.empty() ? "0" : s;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis<F>> basis;
  };

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> generators_;
  std::shared_ptr<Cache> cache_;
};

template <class F>
Ideal<F> ideal_intersect(const Ideal<F>& I, const Ideal<F>& J);

/// I : (g). Throws ArgumentError when g is zero.
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Polynomial<F>& g);

/// I : J as the intersection of I : (g) over the generators g of J.
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Ideal<F>& J);

/// Exact quotient f / g; throws ArgumentError if g does not divide f.
template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& f, const Polynomial<F>& g);

/// Krull dimension of R/I. Throws DimensionError for the unit ideal.
template <class F>
int dimension(const Ideal<F>& I);

template <class F>
int height(const Ideal<F>& I) {
  return static_cast<int>(I.ring()->num_variables()) - dimension(I);
}

/// Hilbert series of R/I written as numerator / (1 - t)^dimension with
/// numerator(1) != 0; multiplicity is numerator(1).
struct HilbertData {
  std::vector<long long> numerator;
  int dimension = 0;
  long long multiplicity = 0;
};

/// Numerator K(t) of the Hilbert series of R/I over (1 - t)^N, unreduced.
template <class F>
std::vector<long long> hilbert_numerator(const Ideal<F>& I);

/// Hilbert series of a monomial ideal, unreduced numerator over (1 - t)^N.
std::vector<long long> monomial_hilbert_numerator(std::vector<Monomial> generators, std::size_t num_variables);

/// Reduces a numerator over (1 - t)^N to lowest terms.
HilbertData reduce_hilbert_numerator(std::vector<long long> numerator, int num_variables);

/// Throws ArgumentError for inhomogeneous generators and DimensionError for
/// the unit ideal. The zero ideal gives dimension N and multiplicity 1.
template <class F>
HilbertData hilbert(const Ideal<F>& I);

template <class F>
long long multiplicity(const Ideal<F>& I) {
  return hilbert(I).multiplicity;
}

/// True iff each f_i is a nonzerodivisor modulo (f_1..f_{i-1}) and the whole
/// ideal is proper.
template <class F>
bool is_regular_sequence(const std::vector<Polynomial<F>>& fs);

/// Minimal homogeneous generators: keeps a generator, in order of increasing
/// degree, iff it is not in the ideal of those kept before it.
template <class F>
std::vector<Polynomial<F>> minimal_generators(const Ideal<F>& I);

/// Maximum size of a set of variables containing the support of no monomial.
int max_independent_set(const std::vector<Monomial>& monomials, std::size_t num_variables);

#define PDQUAD_IDEAL_EXTERN(F)                                                                   \
  extern template GroebnerBasis<F> groebner(const RingPtr<F>&, const std::vector<Polynomial<F>>&, \
                                            const GroebnerOptions&);                             \
  extern template Polynomial<F> normal_form(const Polynomial<F>&, const GroebnerBasis<F>&);      \
  extern template Ideal<F> ideal_intersect(const Ideal<F>&, const Ideal<F>&);                    \
  extern template Ideal<F> ideal_quotient(const Ideal<F>&, const Polynomial<F>&);                \
  extern template Ideal<F> ideal_quotient(const Ideal<F>&, const Ideal<F>&);                     \
  extern template Polynomial<F> divide_exact(const Polynomial<F>&, const Polynomial<F>&);        \
  extern template int dimension(const Ideal<F>&);                                                \
  extern template std::vector<long long> hilbert_numerator(const Ideal<F>&);                     \
  extern template HilbertData hilbert(const Ideal<F>&);                                          \
  extern template bool is_regular_sequence(const std::vector<Polynomial<F>>&);                   \
  extern template std::vector<Polynomial<F>> minimal_generators(const Ideal<F>&);

PDQUAD_IDEAL_EXTERN(PrimeField)
PDQUAD_IDEAL_EXTERN(RationalField)
#undef PDQUAD_IDEAL_EXTERN

}  // namespace pdquad
