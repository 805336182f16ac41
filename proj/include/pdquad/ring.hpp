#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pdquad/field.hpp"
#include "pdquad/monomial.hpp"

namespace pdquad {

/// A standard graded polynomial ring over `F`: the field, the ordered variable
/// names and the monomial order. Immutable once built; shared by pointer.
template <class F>
class Ring {
 public:
  using Field = F;
  using Element = typename F::Element;

  Ring(F field, std::vector<std::string> variables, MonomialOrder order = MonomialOrder::grevlex())
      : field_(std::move(field)), names_(std::move(variables)), order_(order) {
    if (names_.empty()) throw ArgumentError("a ring needs at least one variable");
    if (names_.size() > kMaxVariables)
      throw ArgumentError("at most " + std::to_string(kMaxVariables) + " variables are supported");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw ArgumentError("duplicate variable name '" + names_[i] + "'");
    if (order_.eliminate < 0 || static_cast<std::size_t>(order_.eliminate) > names_.size())
      throw ArgumentError("elimination block larger than the variable list");
  }

  const F& field() const noexcept { return field_; }
  std::size_t num_variables() const noexcept { return names_.size(); }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  const std::string& variable_name(std::size_t i) const { return names_.at(i); }
  const MonomialOrder& order() const noexcept { return order_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  Monomial one() const { return Monomial(names_.size()); }
  Monomial variable(std::size_t i) const { return Monomial::variable(names_.size(), i); }

  int compare(const Monomial& a, const Monomial& b) const {
    return static_cast<int>(monomial_compare(a, b, order_));
  }

  /// Header line of the document format, e.g. `GF(32003)[x,y]`.
  std::string describe() const {
    std::string s = field_.name() + "[";
    for (std::size_t i = 0; i < names_.size(); ++i) s += (i ? "," : "") + names_[i];
    return s + "]";
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  F field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> variables,
                     MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const Ring<F>>(std::move(field), std::move(variables), order);
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

template <class F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (!same_ring(a, b)) throw StructuralError("operands live in different rings");
}

}  // namespace pdquad
