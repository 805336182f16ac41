#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "pdquad/ideal.hpp"
#include "pdquad/matrix.hpp"

namespace pdquad {

/// Graded Betti numbers: (homological index i, internal degree j) -> beta_ij,
/// zero entries omitted.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(std::map<std::pair<int, int>, long long> entries);

  long long at(int i, int j) const;
  /// Sum over j of beta_ij.
  long long total(int i) const;
  /// Largest i with a nonzero entry; -1 for the empty table.
  int projective_dimension() const;
  const std::map<std::pair<int, int>, long long>& entries() const noexcept { return entries_; }

  /// Coefficients of sum (-1)^i beta_ij t^j, the Hilbert series numerator over (1 - t)^N.
  std::vector<long long> hilbert_numerator() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, long long> entries_;
};

/// A graded free module: one degree shift per basis element.
struct GradedFreeModule {
  std::vector<int> twists;
  std::size_t rank() const noexcept { return twists.size(); }
};

/// Free resolution F_0 <- F_1 <- ... <- F_p of R/I with F_0 = R.
/// differential(i) is the matrix of d_i : F_i -> F_{i-1}, columns indexed by
/// the basis of F_i.
template <class F>
class FreeResolution {
 public:
  FreeResolution(RingPtr<F> ring, std::vector<GradedFreeModule> modules, std::vector<SparseMatrix<F>> differentials,
                 bool minimal)
      : ring_(std::move(ring)), modules_(std::move(modules)), differentials_(std::move(differentials)),
        minimal_(minimal) {
    if (modules_.empty() || differentials_.size() + 1 != modules_.size())
      throw StructuralError("a resolution needs one differential between consecutive modules");
  }

  const RingPtr<F>& ring() const noexcept { return ring_; }
  /// p, the index of the last module.
  int length() const noexcept { return static_cast<int>(differentials_.size()); }
  const GradedFreeModule& module(int i) const { return modules_.at(i); }
  const std::vector<GradedFreeModule>& modules() const noexcept { return modules_; }
  /// d_i for 1 <= i <= length().
  const SparseMatrix<F>& differential(int i) const { return differentials_.at(i - 1); }
  bool is_minimal() const noexcept { return minimal_; }

  BettiTable betti() const;

 private:
  RingPtr<F> ring_;
  std::vector<GradedFreeModule> modules_;
  std::vector<SparseMatrix<F>> differentials_;
  bool minimal_;
};

/// Schreyer resolution of R/I by iterated syzygies of Groebner bases; not
/// minimal in general. Requires I homogeneous and proper.
template <class F>
FreeResolution<F> schreyer_resolution(const Ideal<F>& I);

/// Cancels unit entries until every entry of every differential lies in the
/// maximal ideal.
template <class F>
FreeResolution<F> minimize(const FreeResolution<F>& resolution);

template <class F>
FreeResolution<F> minimal_free_resolution(const Ideal<F>& I);

/// pd(R/I).
template <class F>
int projective_dimension(const Ideal<F>& I);

/// True iff f is not in I and every variable times f is.
template <class F>
bool is_socle_element(const Polynomial<F>& f, const Ideal<F>& I);

/// Generators of the syzygy module of the columns of M, returned as the
/// columns of a matrix with M * result = 0. Entries of column j must be
/// homogeneous of one degree shifted by `row_twists`; throws ArgumentError
/// otherwise. The generators are pruned to a minimal set.
template <class F>
SparseMatrix<F> syzygies(const SparseMatrix<F>& M, const std::vector<int>& row_twists);

/// d_i * d_{i+1} == 0 for all i.
template <class F>
bool composes_to_zero(const FreeResolution<F>& resolution);

/// Every differential entry has positive degree.
template <class F>
bool has_no_units(const FreeResolution<F>& resolution);

/// Each entry of d_i is homogeneous of degree (column twist - row twist).
template <class F>
bool is_graded(const FreeResolution<F>& resolution);

/// rank d_i + rank d_{i+1} = rank F_i for i >= 1 and rank d_1 = 1 when I is
/// nonzero, with ranks taken at random points. A point that lowers a rank is
/// resampled a few times; a persistent failure is settled exactly by
/// comparing ker d_i with im d_{i+1} through Groebner bases.
template <class F>
bool exactness_spot_check(const FreeResolution<F>& resolution, std::mt19937_64& rng);

/// The exact version of the above.
template <class F>
bool is_exact(const FreeResolution<F>& resolution);

#define PDQUAD_RESOLUTION_EXTERN(F)                                                         \
  extern template class FreeResolution<F>;                                                  \
  extern template FreeResolution<F> schreyer_resolution(const Ideal<F>&);                   \
  extern template FreeResolution<F> minimize(const FreeResolution<F>&);                     \
  extern template FreeResolution<F> minimal_free_resolution(const Ideal<F>&);               \
  extern template int projective_dimension(const Ideal<F>&);                                \
  extern template bool is_socle_element(const Polynomial<F>&, const Ideal<F>&);             \
  extern template SparseMatrix<F> syzygies(const SparseMatrix<F>&, const std::vector<int>&); \
  extern template bool composes_to_zero(const FreeResolution<F>&);                          \
  extern template bool has_no_units(const FreeResolution<F>&);                              \
  extern template bool is_graded(const FreeResolution<F>&);                                 \
  extern template bool exactness_spot_check(const FreeResolution<F>&, std::mt19937_64&);    \
  extern template bool is_exact(const FreeResolution<F>&);

PDQUAD_RESOLUTION_EXTERN(PrimeField)
PDQUAD_RESOLUTION_EXTERN(RationalField)
#undef PDQUAD_RESOLUTION_EXTERN

}  // namespace pdquad
