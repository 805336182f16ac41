#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace pdquad;
using namespace testing_support;

TEST_CASE("monomial_compare follows grevlex") {
  Monomial x2(std::vector<int>{2, 0}), xy(std::vector<int>{1, 1}), x(std::vector<int>{1, 0}),
      y2(std::vector<int>{0, 2});
  CHECK(monomial_compare(x2, xy, MonomialOrder::grevlex()) == Ordering::greater);
  CHECK(monomial_compare(x, y2, MonomialOrder::grevlex()) == Ordering::less);
  CHECK(monomial_compare(xy, xy, MonomialOrder::lex()) == Ordering::equal);
  // x*z^2 vs y^3 in three variables: grevlex prefers y^3, lex prefers x*z^2.
  Monomial xz2(std::vector<int>{1, 0, 2}), y3(std::vector<int>{0, 3, 0});
  CHECK(monomial_compare(xz2, y3, MonomialOrder::grevlex()) == Ordering::less);
  CHECK(monomial_compare(xz2, y3, MonomialOrder::lex()) == Ordering::greater);
  CHECK_THROWS_AS(monomial_compare(x, xz2, MonomialOrder::grevlex()), StructuralError);
}

TEST_CASE("monomial order axioms on random monomials") {
  std::mt19937_64 rng(7);
  auto draw = [&] {
    std::vector<int> e(4);
    for (auto& v : e) v = static_cast<int>(uniform_below(rng, 4));
    return Monomial(e);
  };
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(1)}) {
    for (int k = 0; k < 300; ++k) {
      Monomial a = draw(), b = draw(), c = draw();
      const auto ab = monomial_compare(a, b, order);
      CHECK(ab == static_cast<Ordering>(-static_cast<int>(monomial_compare(b, a, order))));
      CHECK((ab == Ordering::equal) == (a == b));
      if (ab == Ordering::less) CHECK(monomial_compare(a * c, b * c, order) == Ordering::less);
      if (monomial_compare(a, b, order) == Ordering::less && monomial_compare(b, c, order) == Ordering::less)
        CHECK(monomial_compare(a, c, order) == Ordering::less);
      CHECK(monomial_compare(a * c, a, order) != Ordering::less);
    }
  }
}

TEST_CASE("monomial arithmetic") {
  Monomial a(std::vector<int>{2, 1, 0}), b(std::vector<int>{1, 3, 1});
  CHECK((a * b).degree() == 8);
  CHECK(Monomial::lcm(a, b) == Monomial(std::vector<int>{2, 3, 1}));
  CHECK(Monomial::gcd(a, b) == Monomial(std::vector<int>{1, 1, 0}));
  CHECK(Monomial::gcd(a, b).divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK_THROWS_AS(a / b, ArgumentError);
  CHECK(Monomial::variable(3, 1, 4).degree() == 4);
}

TEST_CASE("polynomial arithmetic examples") {
  auto R = qq_ring({"x", "y"});
  CHECK(P(R, "(x+y)*(x-y)") == P(R, "x^2 - y^2"));
  CHECK(P(R, "x + 3*y") + Polynomial<QQ>(R) == P(R, "x + 3*y"));
  auto R2 = gf_ring({"x", "y"}, 2);
  CHECK(P(R2, "(x+y)^2") == P(R2, "x^2 + y^2"));
  CHECK(P(R, "1/2*x + 1/2*x") == P(R, "x"));
  CHECK(P(R, "x^2 - 2*x*y").to_string() == "x^2 - 2*x*y");
  auto S = gf_ring({"x", "y"}, 7);
  CHECK_THROWS_AS((void)(P(R, "x") + Polynomial<QQ>(qq_ring({"a"}))), StructuralError);
  (void)S;
}

TEST_CASE("ring axioms and canonical form on random polynomials") {
  auto R = gf_ring({"x", "y", "z"}, 101);
  std::mt19937_64 rng(11);
  auto draw = [&] {
    std::vector<Polynomial<GF>::Term> terms;
    for (int k = 0; k < 5; ++k) {
      std::vector<int> e(3);
      for (auto& v : e) v = static_cast<int>(uniform_below(rng, 3));
      terms.push_back({Monomial(e), R->field().random(rng)});
    }
    return Polynomial<GF>(R, terms);
  };
  auto is_canonical = [&](const Polynomial<GF>& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
      if (R->compare(p.terms()[i - 1].monomial, p.terms()[i].monomial) <= 0) return false;
    for (const auto& t : p.terms())
      if (t.coefficient == 0) return false;
    return true;
  };
  for (int k = 0; k < 100; ++k) {
    auto a = draw(), b = draw(), c = draw();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    CHECK(is_canonical(a * b + c));
    CHECK(Polynomial<GF>(R, (a * b - c).terms()) == a * b - c);
  }
}

TEST_CASE("homogeneity is preserved by sums and products") {
  auto R = qq_ring({"x", "y", "z"});
  auto f = P(R, "x^2 + y*z"), g = P(R, "x*y - 3*z^2"), l = P(R, "x - y");
  CHECK((f + g).is_homogeneous_of_degree(2));
  CHECK((f * l).is_homogeneous_of_degree(3));
  CHECK_FALSE((f + l).is_homogeneous());
  CHECK_THROWS_AS((void)LinearForm<QQ>{f}, ArgumentError);
  CHECK(LinearForm<QQ>(l).polynomial() == l);
}

TEST_CASE("random_linear_form") {
  auto R = gf_ring({"x", "y"}, 5);
  std::vector<std::size_t> sx{0}, sxy{0, 1};
  auto p = random_linear_form(R, std::uint64_t{42}, std::span<const std::size_t>(sx));
  CHECK(p.size() == 1);
  CHECK(p.leading_monomial() == R->variable(0));
  CHECK(random_linear_form(R, std::uint64_t{42}, std::span<const std::size_t>(sxy)) ==
        random_linear_form(R, std::uint64_t{42}, std::span<const std::size_t>(sxy)));
  std::mt19937_64 rng(3);
  std::set<std::string> seen;
  for (int k = 0; k < 1000; ++k) {
    auto f = random_linear_form(R, rng, std::span<const std::size_t>(sxy));
    CHECK_FALSE(f.is_zero());
    seen.insert(f.to_string());
  }
  // 5^2 - 1 nonzero forms over F_5.
  CHECK(seen.size() == 24);
  CHECK_THROWS_AS(random_linear_form(R, rng, std::span<const std::size_t>()), ArgumentError);
}

TEST_CASE("parser positions and errors") {
  auto R = gf_ring({"x", "y"});
  CHECK(P(R, " x ^ 2 + 2 * x*y - (y) ").to_string() == "x^2 + 2*x*y - y");
  try {
    (void)P(R, "x^2 + z");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 7);
    CHECK(std::string(e.what()).find("'z'") != std::string::npos);
  }
  CHECK_THROWS_AS((void)P(R, "x +"), ParseError);
  CHECK_THROWS_AS((void)P(R, "x ** y"), ParseError);
  CHECK_THROWS_AS((void)P(R, "(x"), ParseError);
  CHECK_THROWS_AS((void)P(R, "x^999"), ParseError);
  CHECK_THROWS_AS((void)P(R, "1/32003"), ParseError);
  CHECK(P(R, "-x").to_string() == "-x");
  auto items = split_top_level("x^2, (x+y)*(x, y)", 1);
  CHECK(items.size() == 2);
}

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(gf_ring({"x", "x"}), ArgumentError);
  CHECK_THROWS_AS(gf_ring({}), ArgumentError);
  CHECK_THROWS_AS(GF(32004), ArgumentError);
  CHECK(gf_ring({"x", "y"})->describe() == "GF(32003)[x,y]");
}
