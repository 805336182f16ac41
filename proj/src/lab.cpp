#include "pdquad/lab.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "pdquad/document.hpp"
#include "pdquad/linalg.hpp"

namespace pdquad::lab {
namespace {

using Poly = Polynomial<GF>;
using RingP = RingPtr<GF>;

std::vector<std::string> variable_names(int count) {
  static const std::vector<std::string> base{"x", "y", "z", "w", "u", "v", "s", "t", "p", "q", "r"};
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i)
    out.push_back(i < static_cast<int>(base.size()) ? base[i] : "v" + std::to_string(i));
  return out;
}

RingP make_lab_ring(int num_vars, std::uint32_t characteristic) {
  if (num_vars < 1) throw ArgumentError("a ring needs at least one variable");
  return make_ring(GF(characteristic), variable_names(num_vars));
}

Poly var(const RingP& R, std::size_t i) { return Poly::variable(R, i); }

std::vector<std::size_t> all_variables(const RingP& R) {
  std::vector<std::size_t> v(R->num_variables());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

Poly random_form(const RingP& R, std::mt19937_64& rng) {
  const auto support = all_variables(R);
  return random_linear_form(R, rng, support);
}

/// Rank of the symmetric matrix of a quadric (characteristic not 2).
std::size_t quadric_rank(const Poly& q) {
  const GF& K = q.field();
  const std::size_t N = q.ring()->num_variables();
  DenseMatrix<GF> G(K, N, N);
  for (const auto& t : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < N; ++i)
      for (int e = 0; e < t.monomial.exponent(i); ++e) idx.push_back(i);
    if (idx.size() != 2) throw ArgumentError("not a quadric: " + q.to_string());
    if (idx[0] == idx[1]) {
      G(idx[0], idx[0]) = K.add(t.coefficient, t.coefficient);
    } else {
      G(idx[0], idx[1]) = t.coefficient;
      G(idx[1], idx[0]) = t.coefficient;
    }
  }
  return rank(K, G);
}

/// Random quadric in the variables [first, N) of rank at least three.
Poly irreducible_quadric(const RingP& R, std::mt19937_64& rng, std::size_t first) {
  if (R->field().characteristic() == 2) throw UnsupportedError("quadric rank is not available in characteristic 2");
  if (R->num_variables() < first + 3) throw GenerationError("an irreducible quadric needs three free variables");
  const GF& K = R->field();
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Poly::Term> terms;
    for (std::size_t i = first; i < R->num_variables(); ++i)
      for (std::size_t j = i; j < R->num_variables(); ++j)
        terms.push_back({R->variable(i) * R->variable(j), K.random(rng)});
    Poly q(R, terms);
    if (!q.is_zero() && quadric_rank(q) >= 3) return q;
  }
  throw GenerationError("no quadric of rank three found");
}

/// Random invertible substitution of the variables.
std::vector<Poly> random_coordinates(const RingP& R, std::mt19937_64& rng) {
  const GF& K = R->field();
  const std::size_t N = R->num_variables();
  for (;;) {
    DenseMatrix<GF> T(K, N, N);
    for (auto& v : T.data) v = K.random(rng);
    if (rank(K, T) != N) continue;
    std::vector<Poly> images;
    for (std::size_t r = 0; r < N; ++r) {
      std::vector<GF::Element> row(T.data.begin() + r * N, T.data.begin() + (r + 1) * N);
      images.push_back(Poly::linear_form(R, row));
    }
    return images;
  }
}

GFIdeal substitute(const GFIdeal& I, const std::vector<Poly>& images) {
  std::vector<Poly> gens;
  for (const auto& g : I.generators()) gens.push_back(g.substitute(images));
  return GFIdeal(I.ring(), std::move(gens));
}

struct Invariants {
  int n = 0;
  int pd = 0;
  int height = 0;
};

Invariants invariants(const GFIdeal& I) {
  Invariants inv;
  inv.height = height(I);
  const auto betti = minimal_free_resolution(I).betti();
  inv.n = static_cast<int>(betti.total(1));
  inv.pd = betti.projective_dimension();
  return inv;
}

BoundReport make_report(const std::string& instance, const Invariants& inv, int bound, std::string source,
                        bool theorem_backed = true) {
  BoundReport r;
  r.instance = instance;
  r.n = inv.n;
  r.height = inv.height;
  r.pd = inv.pd;
  r.bound = bound;
  r.source = std::move(source);
  r.pass = inv.pd <= bound;
  r.theorem_backed = theorem_backed;
  return r;
}

std::vector<BoundReport> case_bounds(const GFIdeal& I, const CaseContext& ctx, const std::string& instance,
                                     const Invariants& inv, std::optional<std::string>* type_out) {
  std::vector<BoundReport> out;
  const int n = inv.n;
  if (ctx.family) {
    switch (*ctx.family) {
      case Family::in_scroll:
        out.push_back(make_report(instance, inv, 2, "scroll-prime"));
        break;
      case Family::in_xq:
        out.push_back(make_report(instance, inv, n, "multiplicity-two-prime"));
        break;
      case Family::two_linear_primes:
        out.push_back(make_report(instance, inv, n, "two-linear-primes"));
        break;
      case Family::multiple_structure:
        out.push_back(make_report(instance, inv, n + 2, "multiple-structure"));
        break;
      case Family::in_linear_prime:
      case Family::canonical_form_type:
        out.push_back(make_report(instance, inv, 2 * n - 2, "linear-prime"));
        break;
      default:
        break;
    }
  }
  if (ctx.shape) {
    static const std::map<CanonicalType, std::pair<const char*, bool>> shapes{
        {CanonicalType::T1, {"one-generic", false}},       {CanonicalType::T2, {"one-zero", false}},
        {CanonicalType::T3, {"two-zeros-same-row", true}}, {CanonicalType::T4, {"zeros-in-both-rows", true}},
        {CanonicalType::T5, {"lambda-form", true}}};
    const auto& [name, doubled] = shapes.at(*ctx.shape);
    out.push_back(make_report(instance, inv, doubled ? 2 * n - 2 : n, name));
  }
  if (!ctx.primes.empty() && n >= 3) {
    try {
      const auto sig = classify_type(I, ctx.primes);
      if (type_out) *type_out = sig.to_string();
      out.push_back(make_report(instance, inv, table_bound(sig, n), "type-table " + sig.to_string()));
    } catch (const ClassificationError&) {
    } catch (const ArgumentError&) {
    }
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// ----- family generators; each returns a candidate, height is checked by the caller.

Instance linear_prime_candidate(const RingP& R, int n, std::mt19937_64& rng) {
  const Poly x = var(R, 0), y = var(R, 1);
  std::vector<Poly> gens;
  for (int i = 0; i < n; ++i) gens.push_back(x * random_form(R, rng) + y * random_form(R, rng));
  Instance inst{Family::in_linear_prime, 0, GFIdeal(R, gens), {GFIdeal(R, {x, y})}, false, {}, {}, Family::in_linear_prime};
  return inst;
}

Instance xq_candidate(const RingP& R, int n, std::mt19937_64& rng) {
  const Poly x = var(R, 0);
  const Poly q = irreducible_quadric(R, rng, 1);
  std::vector<Poly> gens{q + x * random_form(R, rng)};
  for (int i = 1; i < n; ++i) gens.push_back(x * random_form(R, rng));
  return {Family::in_xq, 0, GFIdeal(R, gens), {GFIdeal(R, {x, q})}, false, {}, {}, Family::in_xq};
}

GFIdeal scroll_in(const RingP& R) {
  if (R->num_variables() < 4) throw GenerationError("the scroll needs four variables");
  const Poly a = var(R, 0), b = var(R, 1), c = var(R, 2), d = var(R, 3);
  return GFIdeal(R, {a * c - b * b, a * d - b * c, b * d - c * c});
}

Instance scroll_candidate(const RingP& R, int n, std::mt19937_64& rng) {
  if (n > 3) throw GenerationError("the scroll prime contains only three independent quadrics");
  const GFIdeal p = scroll_in(R);
  const GF& K = R->field();
  std::vector<Poly> gens;
  for (int i = 0; i < n; ++i) {
    Poly g(R);
    for (const auto& m : p.generators()) g = g + m.scaled(K.random(rng));
    gens.push_back(g);
  }
  return {Family::in_scroll, 0, GFIdeal(R, gens), {p}, n == 3, {}, {}, Family::in_scroll};
}

Instance two_primes_candidate(const RingP& R, int n, std::mt19937_64& rng) {
  if (R->num_variables() < 3) throw GenerationError("two linear primes need three variables");
  const GF& K = R->field();
  const Poly x = var(R, 0), y = var(R, 1), z = var(R, 2);
  std::vector<Poly> gens;
  for (int i = 0; i < n; ++i) gens.push_back((y * z).scaled(K.random(rng)) + x * random_form(R, rng));
  return {Family::two_linear_primes, 0, GFIdeal(R, gens), {GFIdeal(R, {x, y}), GFIdeal(R, {x, z})}, false, {}, {},
          Family::two_linear_primes};
}

Instance multiple_structure_candidate(const RingP& R, int n, std::mt19937_64& rng) {
  // Bottom row inside (x, y): every 2x2 minor of the coefficient matrix lies in (x, y).
  const GF& K = R->field();
  const Poly x = var(R, 0), y = var(R, 1);
  std::vector<Column2<GF>> cols{{x, y}};
  for (int j = 0; j < n; ++j) cols.push_back({random_form(R, rng), x.scaled(K.random(rng)) + y.scaled(K.random(rng))});
  LinearMatrix<GF> M(R, cols);
  return {Family::multiple_structure, 0, ideal_from_minors(M), {GFIdeal(R, {x, y})}, false, M, {},
          Family::multiple_structure};
}

/// Matrix of the requested shape with random entries.
std::optional<LinearMatrix<GF>> shaped_matrix(const RingP& R, int n, CanonicalType shape, std::mt19937_64& rng) {
  const GF& K = R->field();
  const Poly x = var(R, 0), y = var(R, 1), zero(R);
  std::vector<Column2<GF>> cols{{x, y}};
  for (int j = 0; j < n; ++j) cols.push_back({random_form(R, rng), random_form(R, rng)});
  switch (shape) {
    case CanonicalType::T1:
      break;
    case CanonicalType::T2:
      cols[1][0] = zero;
      break;
    case CanonicalType::T3:
      cols[1][0] = zero;
      cols[2][0] = zero;
      break;
    case CanonicalType::T4:
      cols[1][0] = zero;
      cols[2][1] = zero;
      break;
    case CanonicalType::T5:
      cols[1][0] = zero;
      cols[2][1] = zero;
      cols[3][1] = cols[3][0].scaled(K.random_nonzero(rng));
      break;
  }
  LinearMatrix<GF> M(R, cols);
  auto tail = [&](std::size_t from) {
    std::vector<std::size_t> idx{0};
    for (std::size_t k = from; k < M.num_columns(); ++k) idx.push_back(k);
    return is_one_generic(R, M.select(idx));
  };
  if (shape == CanonicalType::T1 && !is_one_generic(M)) return std::nullopt;
  if (shape == CanonicalType::T2 && !tail(2)) return std::nullopt;
  if (shape == CanonicalType::T4 && !tail(3)) return std::nullopt;
  return M;
}

CanonicalType fit_shape(CanonicalType shape, int n) {
  if (shape == CanonicalType::T5 && n < 3) return CanonicalType::T4;
  if ((shape == CanonicalType::T3 || shape == CanonicalType::T4) && n < 2) return CanonicalType::T2;
  return shape;
}

std::optional<Instance> canonical_candidate(const RingP& R, int n, CanonicalType shape, std::mt19937_64& rng) {
  auto M = shaped_matrix(R, n, shape, rng);
  if (!M) return std::nullopt;
  return Instance{Family::canonical_form_type, 0, ideal_from_minors(*M), {GFIdeal(R, {var(R, 0), var(R, 1)})},
                  false, M, shape, Family::canonical_form_type};
}

Instance generic_candidate(const RingP& R, int n, std::mt19937_64& rng) {
  // A height two ideal of quadrics lies in a linear prime, a prime (x, q), or a
  // scroll; draw the prime kind, build inside it, then hide the coordinates.
  const bool scroll_ok = n <= 3 && R->num_variables() >= 4;
  const bool xq_ok = R->num_variables() >= 4 && R->field().characteristic() != 2;
  std::vector<int> kinds{0};
  if (xq_ok) kinds.push_back(1);
  if (scroll_ok) kinds.push_back(2);
  const int kind = kinds[uniform_below(rng, kinds.size())];
  Instance inst = kind == 0 ? linear_prime_candidate(R, n, rng)
                            : kind == 1 ? xq_candidate(R, n, rng) : scroll_candidate(R, n, rng);
  const auto images = random_coordinates(R, rng);
  inst.ideal = substitute(inst.ideal, images);
  for (auto& p : inst.primes) p = substitute(p, images);
  inst.family = Family::generic;
  inst.drawn = Family::generic;
  return inst;
}

Instance mixed_height_candidate(const RingP& R, int n, std::mt19937_64& rng) {
  int h = 1 + static_cast<int>(uniform_below(rng, 3));
  h = std::min({h, n, static_cast<int>(R->num_variables())});
  std::vector<Poly> core;
  for (int j = 0; j < h; ++j) core.push_back(random_form(R, rng));
  std::vector<Poly> gens;
  for (int i = 0; i < n; ++i) {
    Poly g(R);
    for (const auto& L : core) g = g + L * random_form(R, rng);
    gens.push_back(g);
  }
  return {Family::mixed_height, 0, GFIdeal(R, gens), {}, false, {}, {}, Family::mixed_height};
}

}  // namespace

std::uint32_t default_characteristic() {
  const char* env = std::getenv("PDQUAD_CHARACTERISTIC");
  if (!env || !*env) return kDefaultCharacteristic;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v < 2 || v >= (1ULL << 31) || !is_prime(v))
    throw ArgumentError(std::string("PDQUAD_CHARACTERISTIC must be a prime below 2^31, got '") + env + "'");
  return static_cast<std::uint32_t>(v);
}

GFIdeal tight_family(int n, std::uint32_t characteristic) {
  if (n < 2) throw ArgumentError("the tight family needs n >= 2");
  std::vector<std::string> names{"x", "y"};
  for (int k = 1; k <= n - 2; ++k) {
    names.push_back("a1" + std::to_string(k));
    names.push_back("a2" + std::to_string(k));
  }
  auto R = make_ring(GF(characteristic), names);
  const Poly x = var(R, 0), y = var(R, 1);
  std::vector<Poly> gens{x * x, y * y};
  for (int k = 0; k < n - 2; ++k) gens.push_back(var(R, 2 + 2 * k) * x + var(R, 3 + 2 * k) * y);
  return GFIdeal(R, gens);
}

GFIdeal scroll_ideal(std::uint32_t characteristic) {
  auto R = make_ring(GF(characteristic), {"x0", "x1", "x2", "x3"});
  return scroll_in(R);
}

LinearMatrix<GF> one_generic_instance(int n, std::uint64_t seed, int num_vars, std::uint32_t characteristic) {
  if (n < 1) throw ArgumentError("one_generic_instance needs n >= 1");
  if (num_vars == 0) num_vars = 2 * (n + 1);
  if (num_vars < 2) throw ArgumentError("one_generic_instance needs at least two variables");
  auto R = make_lab_ring(num_vars, characteristic);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 50; ++attempt)
    if (auto M = shaped_matrix(R, n, CanonicalType::T1, rng)) return *M;
  throw GenerationError("no 1-generic 2x" + std::to_string(n + 1) + " matrix found over " + std::to_string(num_vars) +
                        " variables within 50 resamples");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::generic: return "generic";
    case Family::in_linear_prime: return "in-linear-prime";
    case Family::in_xq: return "in-(x,q)";
    case Family::in_scroll: return "in-scroll";
    case Family::two_linear_primes: return "two-linear-primes";
    case Family::multiple_structure: return "multiple-structure";
    case Family::canonical_form_type: return "canonical-form-type";
    case Family::mixed: return "mixed";
    case Family::mixed_height: return "mixed-height";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  for (Family f : {Family::generic, Family::in_linear_prime, Family::in_xq, Family::in_scroll,
                   Family::two_linear_primes, Family::multiple_structure, Family::canonical_form_type, Family::mixed,
                   Family::mixed_height})
    if (to_string(f) == text) return f;
  if (text == "in-xq") return Family::in_xq;
  throw ArgumentError("unknown family '" + text + "'");
}

Instance random_quadric_ideal(Family family, int n, std::uint64_t seed, const GeneratorConfig& config) {
  if (n < 1) throw ArgumentError("need at least one quadric");
  if (config.num_vars < 2) throw ArgumentError("need at least two variables");
  auto R = make_lab_ring(config.num_vars, config.characteristic);
  std::mt19937_64 rng(seed);

  Family drawn = family;
  if (family == Family::mixed) {
    static const Family pool[] = {Family::generic, Family::in_linear_prime, Family::canonical_form_type};
    drawn = pool[uniform_below(rng, 3)];
  }
  CanonicalType shape =
      config.shape.value_or(static_cast<CanonicalType>(1 + static_cast<int>(uniform_below(rng, 5))));
  shape = fit_shape(shape, n);

  for (int attempt = 0; attempt < config.budget; ++attempt) {
    std::optional<Instance> cand;
    switch (drawn) {
      case Family::generic: cand = generic_candidate(R, n, rng); break;
      case Family::in_linear_prime: cand = linear_prime_candidate(R, n, rng); break;
      case Family::in_xq: cand = xq_candidate(R, n, rng); break;
      case Family::in_scroll: cand = scroll_candidate(R, n, rng); break;
      case Family::two_linear_primes: cand = two_primes_candidate(R, n, rng); break;
      case Family::multiple_structure: cand = multiple_structure_candidate(R, n, rng); break;
      case Family::canonical_form_type: cand = canonical_candidate(R, n, shape, rng); break;
      case Family::mixed_height: cand = mixed_height_candidate(R, n, rng); break;
      case Family::mixed: break;
    }
    if (!cand) continue;
    if (drawn != Family::mixed_height && height(cand->ideal) != 2) continue;
    cand->family = family;
    cand->drawn = drawn;
    cand->seed = seed;
    return *cand;
  }
  throw GenerationError("no " + to_string(drawn) + " instance with n = " + std::to_string(n) + " after " +
                        std::to_string(config.budget) + " resamples");
}

std::string TypeSignature::to_string() const {
  std::string e, l;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    e += (i ? "," : "") + std::to_string(pairs[i].first);
    l += (i ? "," : "") + std::to_string(pairs[i].second);
  }
  return "<" + e + ";" + l + ">";
}

TypeSignature TypeSignature::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '<' && c != '>') s += c;
  const auto semi = s.find(';');
  if (semi == std::string::npos) throw ArgumentError("type signature needs ';': " + text);
  auto numbers = [&](const std::string& part) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= part.size()) {
      const auto comma = part.find(',', pos);
      const std::string tok = part.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ArgumentError("bad type signature: " + text);
      out.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return out;
  };
  const auto e = numbers(s.substr(0, semi)), l = numbers(s.substr(semi + 1));
  if (e.size() != l.size()) throw ArgumentError("type signature lists differ in length: " + text);
  TypeSignature sig;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 1 || l[i] < 1) throw ArgumentError("type signature entries must be positive: " + text);
    sig.pairs.emplace_back(e[i], l[i]);
  }
  std::sort(sig.pairs.begin(), sig.pairs.end());
  return sig;
}

const std::vector<TypeSignature>& known_signatures() {
  static const std::vector<TypeSignature> sigs = [] {
    std::vector<TypeSignature> v;
    for (const char* t : {"<1;1>", "<2;1>", "<1;2>", "<1,1;1,1>", "<3;1>", "<1;3>", "<1,2;1,1>", "<1,1;1,2>",
                          "<1,1,1;1,1,1>"})
      v.push_back(TypeSignature::parse(t));
    return v;
  }();
  return sigs;
}

int table_bound(const TypeSignature& sig, int n) {
  static const std::map<std::string, std::pair<int, int>> table{
      // bound = a*n + b
      {"<1;1>", {2, -2}}, {"<2;1>", {1, 0}},   {"<1;2>", {1, 2}},     {"<1,1;1,1>", {1, 1}},    {"<3;1>", {0, 2}},
      {"<1;3>", {1, 2}},  {"<1,2;1,1>", {1, 0}}, {"<1,1;1,2>", {1, 1}}, {"<1,1,1;1,1,1>", {1, 1}}};
  const auto it = table.find(sig.to_string());
  if (it == table.end()) throw ArgumentError("unknown type signature " + sig.to_string());
  return it->second.first * n + it->second.second;
}

long long height_two_multiplicity(const GFIdeal& J) {
  if (J.is_unit()) return 0;
  const int h = height(J);
  if (h > 2) return 0;
  if (h < 2) throw ArgumentError("ideal of height " + std::to_string(h) + " has components below height two");
  return multiplicity(J);
}

GFIdeal saturate(const GFIdeal& J, const GFIdeal& K) {
  GFIdeal cur = J;
  for (;;) {
    GFIdeal next = ideal_quotient(cur, K);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

TypeSignature classify_type(const GFIdeal& I, const std::vector<GFIdeal>& primes) {
  if (primes.empty()) throw ClassificationError("no primes declared");
  if (height(I) != 2) throw ClassificationError("the ideal does not have height two");
  const long long total = multiplicity(I);
  TypeSignature sig;
  long long sum = 0;
  for (const auto& p : primes) {
    if (!p.contains(I)) throw ClassificationError("declared prime (" + p.to_string() + ") does not contain the ideal");
    if (height(p) != 2) throw ClassificationError("declared prime (" + p.to_string() + ") does not have height two");
    const long long e = multiplicity(p);
    const long long local = total - height_two_multiplicity(saturate(I, p));
    if (local <= 0 || local % e != 0)
      throw ClassificationError("local length at (" + p.to_string() + ") is not a positive integer");
    sig.pairs.emplace_back(static_cast<int>(e), static_cast<int>(local / e));
    sum += local;
  }
  if (sum != total)
    throw ClassificationError("e(R/I) = " + std::to_string(total) + " but the declared primes account for " +
                              std::to_string(sum) + "; a minimal prime is missing");
  std::sort(sig.pairs.begin(), sig.pairs.end());
  return sig;
}

BoundReport verify_main_bound(const GFIdeal& I, const std::string& instance) {
  const int h = height(I);
  if (h != 2) throw PreconditionError("the main bound needs height two, got " + std::to_string(h));
  const auto inv = invariants(I);
  return make_report(instance, inv, 2 * inv.n - 2, "main");
}

std::vector<BoundReport> verify_case_bounds(const GFIdeal& I, const CaseContext& context,
                                            const std::string& instance) {
  return case_bounds(I, context, instance, invariants(I), nullptr);
}

CaseContext infer_context(const GFIdeal& I, const std::vector<GFIdeal>& primes,
                          const std::optional<LinearMatrix<GF>>& matrix) {
  CaseContext ctx;
  std::vector<long long> mults;
  for (const auto& p : primes) {
    if (p.is_unit() || !p.contains(I) || height(p) != 2) continue;
    ctx.primes.push_back(p);
    mults.push_back(multiplicity(p));
  }
  if (mults.size() == 1) {
    if (mults[0] == 1) ctx.family = Family::in_linear_prime;
    if (mults[0] == 2) ctx.family = Family::in_xq;
    if (mults[0] == 3) ctx.family = Family::in_scroll;
  } else if (mults.size() == 2 && mults[0] == 1 && mults[1] == 1 && !(ctx.primes[0] == ctx.primes[1])) {
    ctx.family = Family::two_linear_primes;
  }
  if (matrix && ideal_from_minors(*matrix) == I &&
      static_cast<long long>(matrix->n()) == minimal_free_resolution(I).betti().total(1)) {
    try {
      ctx.shape = canonical_form(*matrix).type;
    } catch (const PreconditionError&) {
    } catch (const ExtensionNeededError&) {
    }
  }
  return ctx;
}

int essential_variable_count(const GFIdeal& I) {
  const GF& K = I.ring()->field();
  if (K.characteristic() == 2) throw UnsupportedError("essential variables are not computed in characteristic 2");
  const std::size_t N = I.ring()->num_variables();
  std::vector<std::vector<GF::Element>> rows;
  for (const auto& g : I.generators()) {
    if (!g.is_homogeneous_of_degree(2)) throw ArgumentError("not a quadric: " + g.to_string());
    for (std::size_t i = 0; i < N; ++i) {
      const auto d = g.derivative(i);
      if (!d.is_zero()) rows.push_back(d.linear_coefficients());
    }
  }
  if (rows.empty()) return 0;
  DenseMatrix<GF> m(K, rows.size(), N);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < N; ++c) m(r, c) = rows[r][c];
  return static_cast<int>(rank(K, m));
}

Question2Record explore_question2(const GFIdeal& I) {
  if (I.is_unit()) throw ArgumentError("question 2 needs a proper ideal");
  Question2Record r;
  const auto inv = invariants(I);
  r.pd = inv.pd;
  r.height = inv.height;
  r.n = inv.n;
  r.bound = r.height * (r.n - r.height + 1);
  r.slack = r.bound - r.pd;
  return r;
}

bool InstanceResult::failed() const {
  if (!multiplicity_ok) return true;
  for (const auto& r : reports)
    if (r.theorem_backed && !r.pass) return true;
  return false;
}

std::uint64_t instance_seed(std::uint64_t campaign_seed, int index) {
  return splitmix64(campaign_seed * 0x100000001B3ULL + static_cast<std::uint64_t>(index));
}

InstanceResult run_instance(const FuzzConfig& config, int index) {
  InstanceResult res;
  res.index = index;
  res.seed = instance_seed(config.seed, index);
  res.family = config.family;
  const int span = std::max(1, config.n_max - config.n_min + 1);
  const int n = config.n_min + index % span;
  GeneratorConfig gen;
  gen.num_vars = config.num_vars;
  gen.characteristic = config.characteristic;
  if (config.family == Family::canonical_form_type) gen.shape = static_cast<CanonicalType>(1 + index % 5);

  std::optional<Instance> inst;
  try {
    inst = random_quadric_ideal(config.family, n, res.seed, gen);
  } catch (const GenerationError& e) {
    res.status = "generation-error";
    res.message = e.what();
    return res;
  }
  res.family = inst->drawn;
  res.document = ideal_document(inst->ideal, inst->primes);
  try {
    const auto inv = invariants(inst->ideal);
    res.n = inv.n;
    res.height = inv.height;
    res.pd = inv.pd;
    res.question2 = explore_question2(inst->ideal);
    if (inv.height == 2) {
      res.multiplicity = multiplicity(inst->ideal);
      res.multiplicity_ok = !(inv.n >= 3 && res.multiplicity > 3);
      const std::string id = "#" + std::to_string(index);
      res.reports.push_back(make_report(id, inv, 2 * inv.n - 2, "main"));
      CaseContext ctx{inst->drawn, inst->shape, inst->primes};
      // Shape bounds speak about matrices whose columns are minimal generators.
      if (inst->matrix && static_cast<int>(inst->matrix->n()) != inv.n) ctx.shape.reset();
      auto cases = case_bounds(inst->ideal, ctx, id, inv, &res.type);
      res.reports.insert(res.reports.end(), cases.begin(), cases.end());
    }
    res.status = "ok";
  } catch (const Error& e) {
    res.status = "error";
    res.message = e.what();
  }
  return res;
}

CampaignSummary fuzz_campaign(const FuzzConfig& config) {
  if (config.trials < 0) throw ArgumentError("trials must be non-negative");
  if (config.n_min < 1 || config.n_max < config.n_min) throw ArgumentError("invalid n range");
  CampaignSummary summary;
  summary.config = config;
  std::vector<InstanceResult> results(static_cast<std::size_t>(config.trials));
  const int jobs = std::max(1, std::min(config.jobs, config.trials));
  if (jobs <= 1) {
    for (int i = 0; i < config.trials; ++i) results[i] = run_instance(config, i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (int i = next++; i < config.trials; i = next++) results[i] = run_instance(config, i);
      });
    for (auto& t : pool) t.join();
  }
  for (auto& r : results) {
    if (r.status == "generation-error") {
      ++summary.generation_errors;
    } else {
      ++summary.generated;
      if (r.status != "ok") ++summary.skipped;
    }
    for (const auto& b : r.reports) {
      if (!b.theorem_backed) continue;
      ++summary.checks;
      (b.pass ? summary.passed : summary.failed) += 1;
    }
    if (!r.multiplicity_ok) ++summary.multiplicity_violations;
    if (r.status == "ok" && r.height == 2) {
      auto& m = summary.max_pd_by_n[r.n];
      m = std::max(m, r.pd);
    }
    if (r.failed()) summary.failures.push_back(r);
    if (r.status == "ok" && r.question2.slack < 0) summary.negative_slack.push_back(r);
  }
  summary.results = std::move(results);
  return summary;
}

std::string ideal_document(const GFIdeal& I, const std::vector<GFIdeal>& primes) {
  return print_document(make_document(I, primes));
}

}  // namespace pdquad::lab
