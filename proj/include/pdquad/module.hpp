#pragma once

#include <cstdint>
#include <vector>

#include "pdquad/monomial.hpp"

namespace pdquad {

/// One term m * e_c of an element of a free module R^r. `key` is the monomial
/// the module order compares: `monomial` itself, or `monomial * lead_c` under
/// a Schreyer order. Multiplying a term by a monomial multiplies both.
template <class F>
struct ModuleTerm {
  Monomial monomial;
  Monomial key;
  std::uint32_t component;
  typename F::Element coefficient;
};

/// Terms sorted strictly descending in a ModuleOrder.
template <class F>
using ModuleVector = std::vector<ModuleTerm<F>>;

/// Monomial orders on free modules.
///
/// - term_over_position: compare monomials first, then components (lower
///   index is larger). Used for ideals, where every term has component 0.
/// - position_over_term: lower component index is larger; ties by monomial.
/// - schreyer: compare `monomial * lead_c` in the base order; ties go to the
///   lower component index. This is the order induced by an ordered list of
///   leading monomials, as in Schreyer's theorem.
class ModuleOrder {
 public:
  enum class Kind : std::uint8_t { term_over_position, position_over_term, schreyer };

  static ModuleOrder ideal(MonomialOrder base) {
    ModuleOrder o;
    o.base_ = base;
    return o;
  }
  static ModuleOrder position_over_term(MonomialOrder base, std::vector<int> twists) {
    ModuleOrder o;
    o.kind_ = Kind::position_over_term;
    o.base_ = base;
    o.twists_ = std::move(twists);
    return o;
  }
  /// Schreyer order for leading monomials `leads` (total monomials in the base
  /// ring). Twists are their degrees.
  static ModuleOrder schreyer(MonomialOrder base, std::vector<Monomial> leads) {
    ModuleOrder o;
    o.kind_ = Kind::schreyer;
    o.base_ = base;
    for (const auto& m : leads) o.twists_.push_back(m.degree());
    o.leads_ = std::move(leads);
    return o;
  }

  /// Per-variable grading weights (default all one). Only degrees, and hence
  /// the sugar selection strategy, depend on them.
  ModuleOrder& with_weights(std::vector<int> weights) {
    weights_ = std::move(weights);
    return *this;
  }

  Kind kind() const noexcept { return kind_; }
  const MonomialOrder& base() const noexcept { return base_; }
  const std::vector<int>& twists() const noexcept { return twists_; }
  const std::vector<Monomial>& leads() const noexcept { return leads_; }

  Monomial key(const Monomial& m, std::uint32_t component) const {
    if (kind_ == Kind::schreyer) return m * leads_.at(component);
    return m;
  }

  int compare(const Monomial& key_a, std::uint32_t ca, const Monomial& key_b, std::uint32_t cb) const {
    if (kind_ == Kind::position_over_term) {
      if (ca != cb) return ca < cb ? 1 : -1;
      return detail::compare_unchecked(key_a, key_b, base_);
    }
    if (int c = detail::compare_unchecked(key_a, key_b, base_)) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

  template <class F>
  int compare(const ModuleTerm<F>& a, const ModuleTerm<F>& b) const {
    return compare(a.key, a.component, b.key, b.component);
  }

  int monomial_degree(const Monomial& m) const {
    return weights_.empty() ? m.degree() : m.weighted_degree(weights_);
  }
  int degree(const Monomial& m, std::uint32_t component) const {
    int d = monomial_degree(m);
    if (component < twists_.size()) d += twists_[component];
    return d;
  }

 private:
  Kind kind_ = Kind::term_over_position;
  MonomialOrder base_;
  std::vector<int> twists_;
  std::vector<Monomial> leads_;
  std::vector<int> weights_;
};

}  // namespace pdquad
