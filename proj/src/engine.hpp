#pragma once

// Buchberger's algorithm over free modules. Ideals are the rank-one case with
// the term_over_position order. Internal to the library.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "pdquad/module.hpp"

namespace pdquad::detail {

struct EngineOptions {
  /// Skip S-pairs whose sugar exceeds this degree. Only meaningful for
  /// homogeneous input, where it yields the basis truncated at that degree.
  std::optional<int> degree_bound;
  /// Reduce tails at the end. Off leaves a minimal but not reduced basis.
  bool interreduce = true;
};

template <class F>
class Engine {
 public:
  using Element = typename F::Element;
  using Term = ModuleTerm<F>;
  using Vec = ModuleVector<F>;

  Engine(const F& field, const ModuleOrder& order, bool ideal_case)
      : K_(field), order_(order), ideal_case_(ideal_case) {}

  const ModuleOrder& order() const noexcept { return order_; }
  const F& field() const noexcept { return K_; }

  /// Term for `c * m * e_comp` under this engine's order.
  Term make_term(Monomial m, std::uint32_t comp, Element c) const {
    Monomial key = order_.key(m, comp);
    return Term{std::move(m), std::move(key), comp, std::move(c)};
  }

  /// Sorts, merges and drops zero terms.
  Vec canonical(Vec v) const {
    std::sort(v.begin(), v.end(), [this](const Term& a, const Term& b) { return order_.compare(a, b) > 0; });
    Vec out;
    out.reserve(v.size());
    for (auto& t : v) {
      if (!out.empty() && out.back().component == t.component && out.back().monomial == t.monomial) {
        out.back().coefficient = K_.add(out.back().coefficient, t.coefficient);
        if (K_.is_zero(out.back().coefficient)) out.pop_back();
      } else if (!K_.is_zero(t.coefficient)) {
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  /// a + c * m * b[from..], merging sorted term lists.
  Vec add_multiple(const Vec& a, std::size_t a_from, const Element& c, const Monomial& m, const Vec& b,
                   std::size_t b_from) const {
    Vec r;
    r.reserve(a.size() - a_from + b.size() - b_from);
    std::size_t i = a_from, j = b_from;
    auto shifted = [&](std::size_t k) {
      const Term& t = b[k];
      return Term{t.monomial * m, t.key * m, t.component, K_.mul(t.coefficient, c)};
    };
    bool have_b = j < b.size();
    Term tb;
    if (have_b) tb = shifted(j);
    while (i < a.size() || have_b) {
      int cmp;
      if (i == a.size()) cmp = -1;
      else if (!have_b) cmp = 1;
      else cmp = order_.compare(a[i], tb);
      if (cmp > 0) {
        r.push_back(a[i++]);
      } else if (cmp < 0) {
        r.push_back(std::move(tb));
        if (++j < b.size()) tb = shifted(j);
        else have_b = false;
      } else {
        Element v = K_.add(a[i].coefficient, tb.coefficient);
        if (!K_.is_zero(v)) {
          r.push_back(a[i]);
          r.back().coefficient = std::move(v);
        }
        ++i;
        if (++j < b.size()) tb = shifted(j);
        else have_b = false;
      }
    }
    return r;
  }

  Vec scaled(Vec v, const Element& c) const {
    for (auto& t : v) t.coefficient = K_.mul(t.coefficient, c);
    return v;
  }
  Vec monic(Vec v) const {
    if (v.empty()) return v;
    return scaled(std::move(v), K_.inv(v.front().coefficient));
  }

  /// Installs a fixed reducer set (no pair processing).
  void set_basis(std::vector<Vec> basis) {
    basis_.clear();
    active_.clear();
    by_component_.clear();
    sugar_.clear();
    for (auto& b : basis) {
      if (b.empty()) continue;
      insert(std::move(b), 0);
    }
  }

  /// Full reduction by the active basis (top reduction only if `tail` is off).
  Vec reduce(Vec f, bool tail = true) const { return reduce_impl(std::move(f), tail, nullptr); }

  struct Quotient {
    std::size_t index;
    Element coefficient;
    Monomial monomial;
  };
  /// Full reduction that also records every reduction step taken.
  Vec reduce_recording(Vec f, std::vector<Quotient>& quotients) const {
    return reduce_impl(std::move(f), true, &quotients);
  }

  /// Runs Buchberger on `generators` and leaves the reduced basis in place.
  void run(const std::vector<Vec>& generators, const EngineOptions& options = {}) {
    basis_.clear();
    active_.clear();
    by_component_.clear();
    sugar_.clear();
    pairs_.clear();
    std::vector<Vec> gens;
    for (const auto& g : generators)
      if (!g.empty()) gens.push_back(g);
    pending_generators_ = gens;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Term& lt = gens[k].front();
      int sugar = 0;
      for (const auto& t : gens[k]) sugar = std::max(sugar, order_.degree(t.monomial, t.component));
      pairs_.insert(Pair{sugar, lt.key, lt.component, -1, static_cast<int>(k)});
    }
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (options.degree_bound && p.sugar > *options.degree_bound) continue;
      Vec h;
      if (p.i < 0) {
        h = pending_generators_[p.j];
      } else {
        h = s_vector(p.i, p.j);
      }
      h = reduce_impl(std::move(h), false, nullptr);
      if (h.empty()) continue;
      // A constant in the ideal case settles everything.
      h = monic(std::move(h));
      add_with_update(std::move(h), p.sugar);
    }
    finalize(options.interreduce);
  }

  /// The reduced basis, ascending by leading term.
  std::vector<Vec> basis() const {
    std::vector<Vec> out;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) out.push_back(basis_[k]);
    return out;
  }
  const std::vector<Vec>& raw_basis() const noexcept { return basis_; }

 private:
  struct Pair {
    int sugar;
    Monomial lcm_key;
    std::uint32_t component;
    int i;  // -1 marks a pending input generator with index j
    int j;
  };
  struct PairLess {
    const ModuleOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (int c = order->compare(a.lcm_key, a.component, b.lcm_key, b.component)) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  Vec s_vector(int i, int j) const {
    const Vec& f = basis_[i];
    const Vec& g = basis_[j];
    Monomial l = Monomial::lcm(f.front().monomial, g.front().monomial);
    // f, g are monic.
    Vec a = add_multiple(Vec{}, 0, K_.one(), l / f.front().monomial, f, 1);
    return add_multiple(a, 0, K_.neg(K_.one()), l / g.front().monomial, g, 1);
  }

  int find_reducer(const Term& t) const {
    if (t.component >= by_component_.size()) return -1;
    for (int k : by_component_[t.component]) {
      if (!active_[k]) continue;
      if (basis_[k].front().monomial.divides(t.monomial)) return k;
    }
    return -1;
  }

  Vec reduce_impl(Vec f, bool tail, std::vector<Quotient>* quotients) const {
    Vec result;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const Term& t = f[pos];
      const int r = find_reducer(t);
      if (r < 0) {
        if (!tail) {
          result.insert(result.end(), f.begin() + pos, f.end());
          return result;
        }
        result.push_back(t);
        ++pos;
        continue;
      }
      const Vec& g = basis_[r];
      Element c = K_.div(t.coefficient, g.front().coefficient);
      Monomial m = t.monomial / g.front().monomial;
      if (quotients) quotients->push_back({static_cast<std::size_t>(r), c, m});
      f = add_multiple(f, pos + 1, K_.neg(c), m, g, 1);
      pos = 0;
    }
    return result;
  }

  void insert(Vec h, int sugar) {
    const std::uint32_t comp = h.front().component;
    if (by_component_.size() <= comp) by_component_.resize(comp + 1);
    by_component_[comp].push_back(static_cast<int>(basis_.size()));
    basis_.push_back(std::move(h));
    active_.push_back(true);
    sugar_.push_back(sugar);
  }

  void add_with_update(Vec h, int sugar) {
    const Term lt = h.front();
    const int hi = static_cast<int>(basis_.size());

    struct Candidate {
      int g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Candidate> cand;
    if (lt.component < by_component_.size()) {
      for (int g : by_component_[lt.component]) {
        if (!active_[g]) continue;
        const Monomial& lg = basis_[g].front().monomial;
        cand.push_back({g, Monomial::lcm(lg, lt.monomial), ideal_case_ && lg.coprime(lt.monomial)});
      }
    }
    // Chain criterion among the new pairs: drop (g,h) when another new pair's
    // lcm properly divides its lcm.
    for (auto& c : cand)
      for (const auto& d : cand)
        if (&c != &d && d.lcm.divides(c.lcm) && !(d.lcm == c.lcm)) {
          c.keep = false;
          break;
        }
    // Equal lcms: keep one, or none if any of them is coprime.
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!cand[a].keep) continue;
      bool any_coprime = cand[a].coprime;
      for (std::size_t b = a + 1; b < cand.size(); ++b)
        if (cand[b].keep && cand[b].lcm == cand[a].lcm) {
          any_coprime = any_coprime || cand[b].coprime;
          cand[b].keep = false;
        }
      if (any_coprime) cand[a].keep = false;
    }

    // Old pairs made redundant by h.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (p.i >= 0 && p.component == lt.component) {
        const Monomial& lp = basis_[p.i].front().monomial;
        const Monomial& lq = basis_[p.j].front().monomial;
        const Monomial l = Monomial::lcm(lp, lq);
        if (lt.monomial.divides(l) && !(Monomial::lcm(lp, lt.monomial) == l) &&
            !(Monomial::lcm(lq, lt.monomial) == l)) {
          it = pairs_.erase(it);
          continue;
        }
      }
      ++it;
    }

    for (const auto& c : cand) {
      if (!c.keep) continue;
      const Monomial& lg = basis_[c.g].front().monomial;
      const int s = std::max(sugar_[c.g] + order_.monomial_degree(c.lcm / lg),
                             sugar + order_.monomial_degree(c.lcm / lt.monomial));
      pairs_.insert(Pair{s, order_.key(c.lcm, lt.component), lt.component, c.g, hi});
    }

    // Elements whose leading term h divides are no longer needed.
    if (lt.component < by_component_.size())
      for (int g : by_component_[lt.component])
        if (active_[g] && lt.monomial.divides(basis_[g].front().monomial)) active_[g] = false;

    insert(std::move(h), sugar);
  }

  void finalize(bool interreduce) {
    std::vector<int> keep;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) keep.push_back(static_cast<int>(k));
    // Minimality: no two active leads divide each other (ensured by the
    // deactivation step above, since later elements are never divisible by
    // earlier active leads after top reduction).
    std::sort(keep.begin(), keep.end(), [this](int a, int b) {
      return order_.compare(basis_[a].front(), basis_[b].front()) < 0;
    });
    std::vector<Vec> reduced;
    reduced.reserve(keep.size());
    for (int k : keep) {
      if (!interreduce) {
        reduced.push_back(basis_[k]);
        continue;
      }
      // Reduce the tail of element k by all other active elements.
      active_[k] = false;
      Vec tail(basis_[k].begin() + 1, basis_[k].end());
      tail = reduce_impl(std::move(tail), true, nullptr);
      active_[k] = true;
      Vec v{basis_[k].front()};
      v.insert(v.end(), tail.begin(), tail.end());
      reduced.push_back(monic(std::move(v)));
    }
    basis_.clear();
    active_.clear();
    by_component_.clear();
    sugar_.clear();
    for (auto& v : reduced) insert(std::move(v), 0);
  }

  const F& K_;
  ModuleOrder order_;
  bool ideal_case_;
  std::vector<Vec> basis_;
  std::vector<bool> active_;
  std::vector<std::vector<int>> by_component_;
  std::vector<int> sugar_;
  std::vector<Vec> pending_generators_;
  std::set<Pair, PairLess> pairs_{PairLess{&order_}};
};

}  // namespace pdquad::detail
