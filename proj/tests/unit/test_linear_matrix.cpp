#include <map>
#include <random>

#include "doctest.h"
#include "pdquad/linear_matrix.hpp"
#include "support.hpp"

using namespace pdquad;
using namespace testing_support;

namespace {

template <class F>
LinearMatrix<F> matrix(const RingPtr<F>& R, const std::vector<std::string>& top, const std::vector<std::string>& bottom) {
  return LinearMatrix<F>::from_rows(R, Ps(R, top), Ps(R, bottom));
}

template <class F>
std::vector<Column2<F>> columns(const RingPtr<F>& R, const std::vector<std::string>& top,
                                const std::vector<std::string>& bottom) {
  std::vector<Column2<F>> out;
  for (std::size_t i = 0; i < top.size(); ++i) out.push_back({P(R, top[i]), P(R, bottom[i])});
  return out;
}

/// Random linear form where each variable appears with probability `density`.
Polynomial<GF> sparse_form(const RingPtr<GF>& R, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Polynomial<GF>::Term> terms;
  for (std::size_t v = 0; v < R->num_variables(); ++v)
    if (keep(rng)) terms.push_back({R->variable(v), R->field().random(rng)});
  return Polynomial<GF>(R, terms);
}

LinearMatrix<GF> random_matrix(const RingPtr<GF>& R, std::mt19937_64& rng, std::size_t n, double density) {
  for (;;) {
    std::vector<Column2<GF>> cols{{random_linear_form(R, rng), random_linear_form(R, rng)}};
    for (std::size_t j = 0; j < n; ++j) cols.push_back({sparse_form(R, rng, density), sparse_form(R, rng, density)});
    try {
      return LinearMatrix<GF>(R, cols);
    } catch (const ArgumentError&) {
    }
  }
}

template <class F>
void check_report(const LinearMatrix<F>& M, const CanonicalFormReport<F>& r) {
  CHECK(satisfies_type(r));
  CHECK(replay(r.log, M) == r.matrix);
  CHECK(ideal_from_minors(M) == ideal_from_minors(r.matrix));
}

}  // namespace

TEST_CASE("represent by coefficients") {
  auto R = gf_ring({"x", "y", "a", "b", "c", "d"});
  auto A = represent_by_coefficients(Ps(R, {"x^2", "x*y", "a*x+b*y", "c*x+d*y"}), P(R, "x"), P(R, "y"));
  CHECK(A.n() == 4);
  const std::vector<std::string> top{"0", "0", "-b", "-d"}, bottom{"x", "y", "a", "c"};
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(A.entry(0, j + 1) == P(R, top[j]));
    CHECK(A.entry(1, j + 1) == P(R, bottom[j]));
  }
  CHECK(A.entry(0, 0) == P(R, "x"));

  auto B = represent_by_coefficients(Ps(R, {"x*y", "y^2"}), P(R, "x"), P(R, "y"));
  CHECK(B.entry(0, 1).is_zero());
  CHECK(B.entry(1, 1) == P(R, "y"));
  CHECK(B.entry(0, 2) == P(R, "-y"));
  CHECK(B.entry(1, 2).is_zero());

  CHECK_THROWS_AS(represent_by_coefficients(Ps(R, {"x^2+a^2"}), P(R, "x"), P(R, "y")), RepresentationError);
  CHECK_THROWS_AS(represent_by_coefficients(Ps(R, {"x^2"}), P(R, "x"), P(R, "2*x")), ArgumentError);
}

TEST_CASE("represent by coefficients in skew coordinates") {
  auto R = gf_ring({"x", "y", "z", "w", "u"});
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = random_linear_form(R, rng), y = random_linear_form(R, rng);
    std::vector<Polynomial<GF>> qs;
    for (int k = 0; k < 4; ++k) qs.push_back(x * random_linear_form(R, rng) + y * random_linear_form(R, rng));
    auto M = represent_by_coefficients(qs, x, y);
    for (std::size_t j = 0; j < qs.size(); ++j)
      CHECK(x * M.entry(1, j + 1) - y * M.entry(0, j + 1) == qs[j]);
    CHECK(ideal_from_minors(M) == Ideal<GF>(R, qs));
  }
}

TEST_CASE("ideal from minors") {
  auto R = gf_ring({"x", "y", "a", "b", "c", "d"});
  auto M = matrix(R, {"x", "0", "0", "-b", "-d"}, {"y", "x", "y", "a", "c"});
  CHECK(same_ideal(ideal_from_minors(M), Id(R, {"x^2", "x*y", "a*x+b*y", "c*x+d*y"})));
  CHECK(ideal_from_minors(matrix(R, {"x", "0", "0"}, {"y", "0", "0"})).is_zero());
  auto G = matrix(R, {"x", "a", "b"}, {"y", "c", "d"});
  CHECK(same_ideal(ideal_from_minors(G), Id(R, {"x*c-y*a", "x*d-y*b"})));
  CHECK_THROWS_AS(matrix(R, {"x", "a"}, {"2*x", "b"}), ArgumentError);
  CHECK_THROWS_AS(matrix(R, {"x", "a^2"}, {"y", "b"}), ArgumentError);
}

TEST_CASE("generalized zeros: examples") {
  SUBCASE("literal zero") {
    auto R = gf_ring({"x", "y", "z"});
    auto r = find_generalized_zero(R, columns(R, {"x", "0"}, {"y", "z"}));
    REQUIRE(r.status == ZeroSearch::witness);
    CHECK(r.witness->s == 1);
    CHECK(r.witness->t == 0);
    CHECK(r.witness->c == std::vector<std::uint32_t>{0, 1});
  }
  SUBCASE("symmetric matrix has none") {
    auto R = gf_ring({"x", "y", "z"});
    auto cols = columns(R, {"x", "y"}, {"y", "z"});
    auto r = find_generalized_zero(R, cols);
    CHECK(r.status == ZeroSearch::none_absolutely);
    CHECK(is_one_generic(R, cols));
  }
  SUBCASE("zero over an extension only") {
    for (std::uint32_t p : {7u, 11u, 19u, 32003u}) {
      auto R = gf_ring({"x", "y"}, p);
      auto r = find_generalized_zero(R, columns(R, {"x", "y"}, {"-y", "x"}));
      CHECK(r.status == ZeroSearch::none_over_base);
      CHECK(r.binary_form == "s^2 + t^2");
    }
    auto R5 = gf_ring({"x", "y"}, 5);
    auto cols5 = columns(R5, {"x", "y"}, {"-y", "x"});
    auto r5 = find_generalized_zero(R5, cols5);
    REQUIRE(r5.status == ZeroSearch::witness);
    CHECK(witness_residual(R5, cols5, *r5.witness).is_zero());
    auto Q = qq_ring({"x", "y"});
    CHECK(find_generalized_zero(Q, columns(Q, {"x", "y"}, {"-y", "x"})).status == ZeroSearch::none_over_base);
  }
  SUBCASE("rational root") {
    auto Q = qq_ring({"x", "y"});
    auto cols = columns(Q, {"2*x", "y"}, {"8*y", "x"});
    auto r = find_generalized_zero(Q, cols);
    REQUIRE(r.status == ZeroSearch::witness);
    CHECK(witness_residual(Q, cols, *r.witness).is_zero());
  }
  SUBCASE("more columns than variables") {
    auto R = gf_ring({"x", "y"});
    auto cols = columns(R, {"x", "y", "x+y"}, {"y", "x", "x"});
    auto r = find_generalized_zero(R, cols);
    REQUIRE(r.status == ZeroSearch::witness);
    CHECK(r.witness->s == 1);
    CHECK(r.witness->t == 0);
    CHECK(witness_residual(R, cols, *r.witness).is_zero());
  }
  SUBCASE("one-genericity") {
    auto R = gf_ring({"x", "y", "a", "b", "c", "d"});
    CHECK(is_one_generic(matrix(R, {"x", "a", "b"}, {"y", "c", "d"})));
    CHECK_FALSE(is_one_generic(matrix(R, {"x", "0", "b"}, {"y", "c", "d"})));
    CHECK_FALSE(is_one_generic(matrix(R, {"x", "a", "b"}, {"y", "c", "0"})));
  }
}

TEST_CASE("generalized zeros agree with exhaustive search over F_5") {
  std::mt19937_64 rng(5);
  int with_zero = 0, without = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t nv = 2 + trial % 3, m = 1 + (trial / 3) % 3;
    std::vector<std::string> names{"x", "y", "z", "w"};
    names.resize(nv);
    auto R = gf_ring(names, 5);
    std::vector<Column2<GF>> cols;
    for (std::size_t j = 0; j < m; ++j) cols.push_back({sparse_form(R, rng, 0.6), sparse_form(R, rng, 0.6)});

    // Every (s : t) in P^1(F_5) and every nonzero c in F_5^m.
    bool exists = false;
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> points{{0, 1}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}};
    std::size_t total = 1;
    for (std::size_t j = 0; j < m; ++j) total *= 5;
    for (auto [s, t] : points)
      for (std::size_t code = 1; code < total && !exists; ++code) {
        GeneralizedZeroWitness<GF> w{s, t, {}};
        for (std::size_t j = 0, v = code; j < m; ++j, v /= 5) w.c.push_back(static_cast<std::uint32_t>(v % 5));
        if (witness_residual(R, cols, w).is_zero()) exists = true;
      }

    auto r = find_generalized_zero(R, cols);
    CHECK((r.status == ZeroSearch::witness) == exists);
    if (r.status == ZeroSearch::witness) {
      ++with_zero;
      CHECK(witness_residual(R, cols, *r.witness).is_zero());
    } else {
      ++without;
    }
  }
  CHECK(with_zero > 20);
  CHECK(without > 20);
}

TEST_CASE("canonical form fixtures") {
  auto R = gf_ring({"x", "y", "a", "b", "c", "d"});

  SUBCASE("T1") {
    auto M = matrix(R, {"x", "a", "b"}, {"y", "c", "d"});
    auto r = canonical_form(M);
    CHECK(r.type == CanonicalType::T1);
    CHECK(r.log.empty());
    check_report(M, r);
  }
  SUBCASE("T3 from the four-quadric example") {
    auto M = matrix(R, {"x", "0", "0", "-b", "-d"}, {"y", "x", "y", "a", "c"});
    auto r = canonical_form(M);
    CHECK(r.type == CanonicalType::T3);
    check_report(M, r);
  }
  SUBCASE("T4") {
    auto M = matrix(R, {"x", "0", "a"}, {"y", "b", "0"});
    auto r = canonical_form(M);
    CHECK(r.type == CanonicalType::T4);
    check_report(M, r);
  }
  SUBCASE("T5") {
    auto M = matrix(R, {"x", "0", "a", "b"}, {"y", "c", "0", "2*b"});
    auto r = canonical_form(M);
    CHECK(r.type == CanonicalType::T5);
    REQUIRE(r.lambda);
    CHECK(R->field().mul(*r.lambda, 2) == R->field().neg(1));
    check_report(M, r);
  }
  SUBCASE("precondition") {
    CHECK_THROWS_AS(canonical_form(matrix(R, {"x", "0"}, {"y", "x"})), PreconditionError);
  }
  SUBCASE("extension needed") {
    auto R7 = gf_ring({"x", "y", "a", "b"}, 7);
    try {
      (void)canonical_form(matrix(R7, {"x", "a", "b"}, {"y", "-b", "a"}));
      FAIL("expected an extension-needed error");
    } catch (const ExtensionNeededError& e) {
      CHECK(e.binary_form() == "s^2 + t^2");
    }
    auto R5 = gf_ring({"x", "y", "a", "b"}, 5);
    auto M5 = matrix(R5, {"x", "a", "b"}, {"y", "-b", "a"});
    auto r = canonical_form(M5);
    CHECK(r.type != CanonicalType::T1);
    check_report(M5, r);
  }
  SUBCASE("T2") {
    auto S = gf_ring({"x", "y", "z", "w", "u", "v", "a"});
    auto M = matrix(S, {"x", "0", "z", "u"}, {"y", "a", "w", "v"});
    auto r = canonical_form(M);
    CHECK(r.type == CanonicalType::T2);
    CHECK(r.log.empty());
    check_report(M, r);
  }
}

TEST_CASE("canonical form on random matrices") {
  auto R = gf_ring({"x", "y", "z", "w", "u", "v"}, 101);
  std::mt19937_64 rng(2024);
  std::map<CanonicalType, int> seen;
  int checked = 0;
  for (int trial = 0; trial < 120 && checked < 60; ++trial) {
    auto M = random_matrix(R, rng, 2 + trial % 3, trial % 2 ? 0.35 : 0.7);
    try {
      auto r = canonical_form(M);
      check_report(M, r);
      ++seen[r.type];
      ++checked;
    } catch (const PreconditionError&) {
    } catch (const ExtensionNeededError&) {
    }
  }
  CHECK(checked >= 50);
  CHECK(seen.size() >= 3);
}

TEST_CASE("elementary operations preserve the minor ideal") {
  auto R = gf_ring({"x", "y", "z", "w", "u"}, 32003);
  std::mt19937_64 rng(77);
  const auto& K = R->field();
  for (int trial = 0; trial < 40; ++trial) {
    auto M = random_matrix(R, rng, 3, 0.8);
    const auto before = ideal_from_minors(M);
    std::vector<ElementaryOp<GF>> ops;
    ops.push_back(ElementaryOp<GF>::row({K.random_nonzero(rng), K.random(rng), 0, K.random_nonzero(rng)}));
    std::vector<std::uint32_t> coeff{0, K.random(rng), K.random_nonzero(rng), K.random(rng)};
    ops.push_back(ElementaryOp<GF>::combine(2, coeff));
    ops.push_back(ElementaryOp<GF>::add_first_column(1 + trial % 3, K.random(rng)));
    ops.push_back(ElementaryOp<GF>::permute_columns({0, 3, 1, 2}));
    for (const auto& op : ops) CHECK(ideal_from_minors(apply(op, M)) == before);
  }
  auto M = random_matrix(R, rng, 3, 0.8);
  CHECK_THROWS_AS(apply(ElementaryOp<GF>::row({1, 2, 2, 4}), M), ArgumentError);
  CHECK_THROWS_AS(apply(ElementaryOp<GF>::combine(2, {0, 1, 0, 1}), M), ArgumentError);
  CHECK_THROWS_AS(apply(ElementaryOp<GF>::permute_columns({1, 0, 2, 3}), M), ArgumentError);
}

TEST_CASE("Cramer containment") {
  auto R = gf_ring({"x", "y", "a", "b", "c", "d"});
  auto G = matrix(R, {"x", "a", "b"}, {"y", "c", "d"});
  auto I = ideal_from_minors(G);
  CHECK(cramer_containment(I, G));
  CHECK(same_ideal(all_minors(G), ideal_quotient(I, Id(R, {"x", "y"}))));

  auto E = matrix(R, {"x", "0", "0", "-b", "-d"}, {"y", "x", "y", "a", "c"});
  CHECK(cramer_containment(ideal_from_minors(E), E));

  auto single = matrix(R, {"x", "a"}, {"y", "b"});
  CHECK(cramer_containment(ideal_from_minors(single), single));
  CHECK(all_minors(single) == ideal_from_minors(single));
}

TEST_CASE("colon equalities for one-generic matrices") {
  std::mt19937_64 rng(9);
  for (std::size_t n : {2u, 3u}) {
    auto R = gf_ring({"x", "y", "z", "w", "u", "v", "s"});
    for (int trial = 0; trial < 3; ++trial) {
      auto M = random_matrix(R, rng, n, 1.0);
      REQUIRE(is_one_generic(M));
      auto I = ideal_from_minors(M);
      const auto I2 = all_minors(M);
      CHECK(same_ideal(I2, ideal_quotient(I, M.x())));
      CHECK(same_ideal(I2, ideal_quotient(I, M.y())));
      CHECK(same_ideal(I2, ideal_quotient(I, Ideal<GF>(R, {M.x(), M.y()}))));
    }
  }
}

TEST_CASE("decomposition lemma") {
  auto R = gf_ring({"x", "y", "z", "w", "u", "v", "a"});
  std::mt19937_64 rng(13);
  std::vector<std::size_t> support{0, 1, 2, 3, 4, 5};
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Column2<GF>> cols{{P(R, "x"), P(R, "y")}};
    for (int j = 0; j < 2; ++j)
      cols.push_back({random_linear_form(R, rng, support), random_linear_form(R, rng, support)});
    LinearMatrix<GF> D(R, cols);
    REQUIRE(is_one_generic(D));
    auto I = ideal_from_minors(D);
    auto a = P(R, "a"), y = P(R, "y");
    auto lhs = Ideal<GF>(R, {a * y}) + I;
    auto rhs = ideal_intersect(Ideal<GF>(R, {y}) + I, Ideal<GF>(R, {a}) + all_minors(D));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("height of minor ideals of rank-bounded matrices") {
  // M = A * B with A of size p x r (linear entries) and B of size r x q
  // (scalars) has rank at most r.
  auto R = gf_ring({"x0", "x1", "x2", "x3", "x4", "x5"}, 101);
  std::mt19937_64 rng(26);
  const auto& K = R->field();
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t p = 2 + trial % 2, q = 3, r = 1 + trial % 2;
    std::vector<std::vector<Polynomial<GF>>> A(p), rows(p, std::vector<Polynomial<GF>>(q, Polynomial<GF>(R)));
    for (auto& row : A)
      for (std::size_t k = 0; k < r; ++k) row.push_back(random_linear_form(R, rng));
    std::vector<std::vector<std::uint32_t>> B(r, std::vector<std::uint32_t>(q));
    for (auto& row : B)
      for (auto& v : row) v = K.random(rng);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j)
        for (std::size_t k = 0; k < r; ++k) rows[i][j] = rows[i][j] + A[i][k].scaled(B[k][j]);
    const long long big = static_cast<long long>(std::max(p, q));
    for (std::size_t i = 1; i <= r; ++i) {
      auto Ii = minors_ideal(R, rows, i);
      if (Ii.is_zero()) continue;
      const long long bound = (static_cast<long long>(r) - i + 1) * (big - i + 1) + i - 1;
      CHECK(height(Ii) <= bound);
    }
    CHECK(minors_ideal(R, rows, r + 1).is_zero());
  }
}

TEST_CASE("univariate roots") {
  GF K(32003);
  // (t - 3)(t - 10)(t^2 + 1); -1 is not a square mod 32003.
  UPoly<GF> f = UPoly<GF>::linear(K, K.neg(3), 1).mul(UPoly<GF>::linear(K, K.neg(10), 1), K);
  f = f.mul(UPoly<GF>(K, {1, 0, 1}), K);
  CHECK(roots(f, K) == std::vector<std::uint32_t>{3, 10});
  QQ Q;
  UPoly<QQ> g(Q, {mpq_class(-3), mpq_class(5), mpq_class(2)});  // (2t - 1)(t + 3)
  CHECK(roots(g, Q) == std::vector<mpq_class>{mpq_class(-3), mpq_class(1, 2)});
}
