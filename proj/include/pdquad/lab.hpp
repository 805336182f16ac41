#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdquad/linear_matrix.hpp"
#include "pdquad/resolution.hpp"

namespace pdquad::lab {

using GF = PrimeField;
using GFIdeal = Ideal<GF>;

/// Characteristic used when none is given: PDQUAD_CHARACTERISTIC if set to a
/// prime, otherwise 32003.
std::uint32_t default_characteristic();

/// (x^2, y^2, a11*x + a21*y, ..., a1k*x + a2k*y) with k = n - 2, in the
/// variables x, y, a11, a21, ..., a1k, a2k.
GFIdeal tight_family(int n, std::uint32_t characteristic = default_characteristic());

/// 2x2 minors of [[x0, x1, x2], [x1, x2, x3]].
GFIdeal scroll_ideal(std::uint32_t characteristic = default_characteristic());

/// Random 2 x (n+1) matrix with first column (v0, v1) and random linear forms
/// elsewhere, resampled until 1-generic. Variables x, y, z, ...; by
/// default 2(n+1) of them.
LinearMatrix<GF> one_generic_instance(int n, std::uint64_t seed, int num_vars = 0,
                                      std::uint32_t characteristic = default_characteristic());

enum class Family {
  generic,
  in_linear_prime,
  in_xq,
  in_scroll,
  two_linear_primes,
  multiple_structure,
  canonical_form_type,
  mixed,
  mixed_height,
};

std::string to_string(Family f);
Family parse_family(const std::string& text);

struct GeneratorConfig {
  int num_vars = 6;
  std::uint32_t characteristic = default_characteristic();
  /// Resamples allowed before GenerationError.
  int budget = 50;
  /// Shape for canonical_form_type; cycles with the seed when unset.
  std::optional<CanonicalType> shape;
};

/// A generated ideal with what its construction guarantees.
struct Instance {
  Family family;
  std::uint64_t seed = 0;
  GFIdeal ideal;
  /// Height-two primes known to contain the ideal.
  std::vector<GFIdeal> primes;
  /// True when `primes` are all the minimal primes of height two.
  bool primes_complete = false;
  std::optional<LinearMatrix<GF>> matrix;
  std::optional<CanonicalType> shape;
  /// The family actually drawn (differs from `family` for mixed families).
  Family drawn;
};

/// n quadrics of the requested family; height two enforced by rejection
/// except for mixed_height, whose height is drawn from {1, 2, 3}.
Instance random_quadric_ideal(Family family, int n, std::uint64_t seed, const GeneratorConfig& config = {});

/// <e_1, ..., e_m ; lambda_1, ..., lambda_m>, pairs sorted ascending.
struct TypeSignature {
  std::vector<std::pair<int, int>> pairs;
  std::string to_string() const;
  static TypeSignature parse(const std::string& text);
  friend bool operator==(const TypeSignature&, const TypeSignature&) = default;
};

/// The nine signatures possible for height two ideals of n >= 3 quadrics.
const std::vector<TypeSignature>& known_signatures();

/// e_i = e(R/p_i); lambda_i = (e(R/I) - e(R/(I : p_i^inf))) / e_i counting
/// height two components only. Throws ClassificationError when a prime does
/// not contain I or has height other than 2, when a division is inexact, or
/// when sum e_i lambda_i differs from e(R/I) (an undeclared minimal prime).
TypeSignature classify_type(const GFIdeal& I, const std::vector<GFIdeal>& primes);

/// Bound on pd(R/I) for each signature; ArgumentError for unknown ones.
int table_bound(const TypeSignature& sig, int n);

/// Multiplicity of R/J if J has height two, 0 if the height is larger.
long long height_two_multiplicity(const GFIdeal& J);

/// J : K^infinity.
GFIdeal saturate(const GFIdeal& J, const GFIdeal& K);

struct BoundReport {
  std::string instance;
  int n = 0;
  int height = 0;
  int pd = 0;
  int bound = 0;
  std::string source;
  bool pass = false;
  /// False for reports that are informative only.
  bool theorem_backed = true;
};

/// pd <= 2n - 2 with n the number of minimal generators. Throws
/// PreconditionError unless ht I = 2.
BoundReport verify_main_bound(const GFIdeal& I, const std::string& instance = "");

/// What is known about how an ideal was built.
struct CaseContext {
  std::optional<Family> family;
  std::optional<CanonicalType> shape;
  std::vector<GFIdeal> primes;
};

/// Context read off declared primes and a representing matrix: one prime of
/// multiplicity 1, 2 or 3 selects the linear, (x, q) or scroll case, two
/// linear primes the two-prime case; primes that do not contain I or do not
/// have height two are ignored. The matrix contributes its canonical shape
/// when its minors generate I and it has one column per minimal generator.
CaseContext infer_context(const GFIdeal& I, const std::vector<GFIdeal>& primes,
                          const std::optional<LinearMatrix<GF>>& matrix = std::nullopt);

/// One report per bound the context makes applicable, plus the type table
/// bound when classify_type succeeds on the declared primes.
std::vector<BoundReport> verify_case_bounds(const GFIdeal& I, const CaseContext& context,
                                            const std::string& instance = "");

/// Dimension of the span of all first partial derivatives of the generators.
/// Generators must be quadrics; characteristic 2 is unsupported.
int essential_variable_count(const GFIdeal& I);

struct Question2Record {
  int pd = 0;
  int height = 0;
  int n = 0;
  int bound = 0;
  int slack = 0;
};

/// Compares pd(R/I) with h(n - h + 1).
Question2Record explore_question2(const GFIdeal& I);

struct FuzzConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  int n_min = 3;
  int n_max = 3;
  int num_vars = 6;
  std::uint32_t characteristic = default_characteristic();
  Family family = Family::generic;
  int jobs = 1;
};

struct InstanceResult {
  int index = 0;
  std::uint64_t seed = 0;
  Family family = Family::generic;
  /// "ok", "generation-error", "height" (not height two), "error".
  std::string status;
  std::string message;
  int n = 0;
  int height = 0;
  int pd = 0;
  long long multiplicity = 0;
  std::optional<std::string> type;
  std::vector<BoundReport> reports;
  bool multiplicity_ok = true;
  Question2Record question2;
  /// Replayable ideal document.
  std::string document;
  bool failed() const;
};

struct CampaignSummary {
  FuzzConfig config;
  int generated = 0;
  int generation_errors = 0;
  int skipped = 0;
  int checks = 0;
  int passed = 0;
  int failed = 0;
  int multiplicity_violations = 0;
  std::map<int, int> max_pd_by_n;
  std::vector<InstanceResult> failures;
  std::vector<InstanceResult> negative_slack;
  std::vector<InstanceResult> results;
  bool ok() const { return failed == 0 && multiplicity_violations == 0; }
};

/// The k-th instance seed of a campaign.
std::uint64_t instance_seed(std::uint64_t campaign_seed, int index);

InstanceResult run_instance(const FuzzConfig& config, int index);

/// Runs every trial (concurrently when jobs > 1) and folds the results in
/// index order, so the summary does not depend on jobs.
CampaignSummary fuzz_campaign(const FuzzConfig& config);

/// Ideal document text: ring header, order, gens and primes.
std::string ideal_document(const GFIdeal& I, const std::vector<GFIdeal>& primes = {});

}  // namespace pdquad::lab
