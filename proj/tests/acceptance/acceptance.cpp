// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "pdquad/cli.hpp"
#include "pdquad/document.hpp"
#include "pdquad/lab.hpp"

using namespace pdquad;
using namespace pdquad::lab;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint32_t kP = 32003;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

GFIdeal document_ideal(const std::string& text) {
  return std::get<IdealDocument<GF>>(parse_document(text)).ideal();
}

Polynomial<GF> var(const RingPtr<GF>& R, std::size_t i) { return Polynomial<GF>::variable(R, i); }

int pd_of(const GFIdeal& I) {
  if (I.is_unit()) return -1;
  return minimal_free_resolution(I).betti().projective_dimension();
}

bool resolution_sound(const GFIdeal& I) {
  const auto res = minimal_free_resolution(I);
  return res.is_minimal() && has_no_units(res) && composes_to_zero(res) &&
         res.betti().hilbert_numerator() == hilbert_numerator(I);
}

// Instances shared by criteria 2, 3 and 10.
struct Campaign {
  std::vector<InstanceResult> instances;
  double seconds = 0;
  int internal_errors = 0;
};

Campaign main_campaign() {
  Campaign c;
  const auto t0 = Clock::now();
  const std::vector<std::pair<Family, int>> plan{
      {Family::generic, 70}, {Family::in_linear_prime, 70}, {Family::canonical_form_type, 70}};
  std::uint64_t seed = 2024;
  for (const auto& [family, trials] : plan) {
    FuzzConfig cfg;
    cfg.seed = seed++;
    cfg.trials = trials;
    cfg.n_min = 3;
    cfg.n_max = 5;
    cfg.num_vars = 8;
    cfg.characteristic = kP;
    cfg.family = family;
    const auto summary = fuzz_campaign(cfg);
    for (const auto& r : summary.results) {
      if (r.status == "error") ++c.internal_errors;
      if (r.status == "ok" && r.height == 2 && r.n >= 3 && r.n <= 5) c.instances.push_back(r);
    }
  }
  c.seconds = seconds_since(t0);
  return c;
}

Verdict criterion1() {
  Verdict v;
  for (int k = 2; k <= 6; ++k) {
    const auto t0 = Clock::now();
    std::istringstream none;
    std::ostringstream doc, err;
    cli::run({"tight", "--n", std::to_string(k)}, none, doc, err);
    std::istringstream piped(doc.str());
    std::ostringstream out;
    const int code = cli::run({"pd", "-"}, piped, out, err);
    v.require(code == 0, "pd exited " + std::to_string(code));
    if (code != 0) continue;
    const int pd = nlohmann::json::parse(out.str())["pd"];
    v.require(pd == 2 * k - 2, "k = " + std::to_string(k) + ": pd " + std::to_string(pd));
    v.require(seconds_since(t0) < 60, "k = " + std::to_string(k) + " took over 60 s");
    const auto I = tight_family(k, kP);
    v.require(is_socle_element(var(I.ring(), 0) * var(I.ring(), 1), I), "xy is not a socle element");
  }
  v.detail = v.pass ? "pd = 2, 4, 6, 8, 10 for n = 2..6; xy in the socle" : v.detail;
  return v;
}

Verdict criterion2(const Campaign& c) {
  Verdict v;
  v.require(c.instances.size() >= 200, "only " + std::to_string(c.instances.size()) + " usable instances");
  v.require(c.internal_errors == 0, std::to_string(c.internal_errors) + " internal errors");
  int violations = 0, max_slack_zero = 0;
  for (const auto& r : c.instances) {
    if (r.pd > 2 * r.n - 2) ++violations;
    if (r.pd == 2 * r.n - 2) ++max_slack_zero;
  }
  v.require(violations == 0, std::to_string(violations) + " instances exceed 2n - 2");
  v.require(c.seconds < 600, "campaign took over 10 minutes");
  if (v.pass) {
    std::ostringstream s;
    s << c.instances.size() << " instances, 0 violations, " << max_slack_zero << " at the bound, "
      << static_cast<int>(c.seconds) << " s";
    v.detail = s.str();
  }
  return v;
}

Verdict criterion3(const Campaign& c) {
  Verdict v;
  int over = 0;
  for (const auto& r : c.instances)
    if (r.multiplicity > 3) ++over;
  v.require(over == 0, std::to_string(over) + " instances with e > 3");
  auto R = make_ring(GF(kP), {"x", "y", "z", "w"});
  std::mt19937_64 rng(31);
  const GFIdeal ci(R, {random_quadric(R, rng), random_quadric(R, rng)});
  const auto e = multiplicity(ci);
  v.require(e == 4, "two generic quadrics gave e = " + std::to_string(e));
  if (v.pass) v.detail = std::to_string(c.instances.size()) + " instances with e <= 3; two generic quadrics e = 4";
  return v;
}

Verdict criterion4() {
  Verdict v;
  GeneratorConfig cfg;
  cfg.num_vars = 4;
  cfg.characteristic = kP;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const auto inst = random_quadric_ideal(Family::in_scroll, n, 500 + seed, cfg);
    const int pd = pd_of(inst.ideal);
    v.require(pd == 2, "seed " + std::to_string(seed) + ": pd " + std::to_string(pd));
    v.require(multiplicity(inst.primes.front()) == 3, "scroll prime multiplicity is not 3");
  }
  v.require(multiplicity(scroll_ideal(kP)) == 3, "scroll multiplicity is not 3");
  if (v.pass) v.detail = "25 ideals in the scroll prime, all pd = 2; e(scroll) = 3";
  return v;
}

Verdict criterion5() {
  Verdict v;
  for (int k = 0; k < 25; ++k) {
    const int n = 2 + k % 3;
    const auto M = one_generic_instance(n, 900 + k, 0, kP);
    const auto I = ideal_from_minors(M);
    const auto& R = M.ring();
    const auto full = all_minors(M);
    const auto by_xy = ideal_quotient(I, GFIdeal(R, {M.x(), M.y()}));
    const auto by_x = ideal_quotient(I, M.x());
    const auto by_y = ideal_quotient(I, M.y());
    for (const auto* other : {&by_xy, &by_x, &by_y})
      v.require(full.contains(*other) && other->contains(full), "colon ideals differ at k = " + std::to_string(k));
    v.require(pd_of(I) <= n, "pd exceeds n at k = " + std::to_string(k));
  }
  if (v.pass) v.detail = "25 1-generic matrices, n = 2..4: I_2(M) = I:(x,y) = I:x = I:y and pd <= n";
  return v;
}

Verdict criterion6() {
  Verdict v;
  std::mt19937_64 rng(66);
  auto R = make_ring(GF(kP), {"x", "y", "z", "w", "u"});
  for (int t = 0; t < 100; ++t) {
    std::vector<Polynomial<GF>> gens;
    const int k = 2 + t % 3;
    for (int i = 0; i < k; ++i) gens.push_back(random_linear_form(R, rng) * random_linear_form(R, rng));
    const GFIdeal I(R, gens);
    const auto x = random_linear_form(R, rng);
    const auto f = random_linear_form(R, rng);
    const std::string at = "triple " + std::to_string(t);
    v.require(ideal_quotient(I + GFIdeal(R, {x * f}), x) == ideal_quotient(I, x) + GFIdeal(R, {f}),
              at + ": (I + (xf)) : x differs from I : x + (f)");
    const int a = pd_of(I), b = pd_of(ideal_quotient(I, x)), c = pd_of(I + GFIdeal(R, {x}));
    v.require(a <= std::max(b, c), at + ": first inequality");
    v.require(b <= std::max(a, c - 1), at + ": second inequality");
    v.require(c <= std::max(b + 1, a), at + ": third inequality");
  }
  if (v.pass) v.detail = "100 triples: colon identity and all three pd inequalities";
  return v;
}

Verdict criterion7(const std::filesystem::path& fixtures) {
  Verdict v;
  const std::vector<std::pair<std::string, CanonicalType>> expected{
      {"t1_one_generic.ideal", CanonicalType::T1}, {"t2_one_zero.ideal", CanonicalType::T2},
      {"t3_four_quadrics.ideal", CanonicalType::T3}, {"t4_both_rows.ideal", CanonicalType::T4},
      {"t5_lambda.ideal", CanonicalType::T5}};
  auto check = [&](const LinearMatrix<GF>& M, const std::string& name) {
    const auto r = canonical_form(M);
    v.require(replay(r.log, M) == r.matrix, name + ": op log does not replay");
    v.require(ideal_from_minors(r.matrix).groebner() == ideal_from_minors(M).groebner(),
              name + ": reduced basis of the minor ideal changed");
    v.require(all_minors(r.matrix).groebner() == all_minors(M).groebner(), name + ": I_2 changed");
    v.require(satisfies_type(r), name + ": result does not have its shape");
    return r.type;
  };
  for (const auto& [file, tag] : expected) {
    const auto doc = std::get<IdealDocument<GF>>(parse_document(slurp(fixtures / file)));
    v.require(doc.matrix.has_value(), file + " has no matrix");
    if (!doc.matrix) continue;
    const auto type = check(*doc.matrix, file);
    v.require(type == tag, file + " classified as " + to_string(type));
  }
  int done = 0;
  GeneratorConfig cfg;
  cfg.characteristic = kP;
  for (std::uint64_t seed = 0; done < 50 && seed < 200; ++seed) {
    cfg.shape = static_cast<CanonicalType>(1 + seed % 5);
    const auto inst = random_quadric_ideal(Family::canonical_form_type, 3, 7000 + seed, cfg);
    // Scramble the shape so the reduction has work to do.
    std::mt19937_64 rng(seed);
    const auto& K = inst.matrix->ring()->field();
    std::array<GF::Element, 4> P{};
    do {
      for (auto& e : P) e = K.random(rng);
    } while (K.is_zero(K.sub(K.mul(P[0], P[3]), K.mul(P[1], P[2]))));
    const auto M = apply(ElementaryOp<GF>::row(P), *inst.matrix);
    try {
      check(M, "random matrix " + std::to_string(seed));
      ++done;
    } catch (const ExtensionNeededError&) {
    }
  }
  v.require(done == 50, "only " + std::to_string(done) + " random matrices reduced");
  if (v.pass) v.detail = "five fixtures give T1..T5 (the four-quadric example gives T3); 50 random matrices keep their ideals";
  return v;
}

Verdict criterion8() {
  Verdict v;
  auto R = make_ring(GF(kP), {"x", "y", "z", "w", "u", "v"});
  std::mt19937_64 rng(88);
  const auto x = var(R, 0), y = var(R, 1);
  int generic = 0;
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 3;
    std::vector<Polynomial<GF>> qs;
    for (int i = 0; i < n; ++i) qs.push_back(x * random_linear_form(R, rng) + y * random_linear_form(R, rng));
    if (k % 4 == 3) qs[0] = x * x;  // leaves a generalized zero
    const GFIdeal I(R, qs);
    const auto M = represent_by_coefficients(qs, x, y);
    v.require(ideal_from_minors(M) == I, "representation lost the ideal at k = " + std::to_string(k));
    v.require(cramer_containment(I, M), "containment fails at k = " + std::to_string(k));
    if (is_one_generic(M)) {
      ++generic;
      const auto colon = ideal_quotient(I, GFIdeal(R, {x, y}));
      v.require(colon.contains(all_minors(M)) && all_minors(M).contains(colon),
                "equality fails on a 1-generic instance at k = " + std::to_string(k));
    }
  }
  v.require(generic > 0, "no 1-generic instance drawn");
  if (v.pass) v.detail = "50 instances contain I_2(A) in I:(x,y); equality on all " + std::to_string(generic) + " 1-generic ones";
  return v;
}

Verdict criterion9() {
  Verdict v;
  struct Row {
    Family family;
    int num_vars;
    std::function<int(int)> bound;
    std::string name;
  };
  const std::vector<Row> rows{{Family::in_xq, 8, [](int n) { return n; }, "(x,q)"},
                              {Family::two_linear_primes, 7, [](int n) { return n; }, "two linear primes"},
                              {Family::multiple_structure, 8, [](int n) { return n + 2; }, "multiple structure"},
                              {Family::in_scroll, 4, [](int) { return 2; }, "scroll"}};
  for (const auto& row : rows) {
    GeneratorConfig cfg;
    cfg.num_vars = row.num_vars;
    cfg.characteristic = kP;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const int gens = row.family == Family::in_scroll ? 2 + static_cast<int>(seed % 2) : 3 + static_cast<int>(seed % 3);
      const auto inst = random_quadric_ideal(row.family, gens, 300 + seed, cfg);
      const auto b = minimal_free_resolution(inst.ideal).betti();
      const int n = static_cast<int>(b.total(1)), pd = b.projective_dimension();
      v.require(pd <= row.bound(n), row.name + " seed " + std::to_string(seed) + ": pd " + std::to_string(pd) +
                                        " over bound " + std::to_string(row.bound(n)));
      if (row.family == Family::two_linear_primes) {
        const auto sig = classify_type(inst.ideal, inst.primes);
        v.require(sig.to_string() == "<1,1;1,1>", "two linear primes classified as " + sig.to_string());
        v.require(pd <= table_bound(sig, n), "two linear primes over the table bound");
      }
    }
  }
  int best = 0;
  for (const auto& s : known_signatures()) best = std::max(best, table_bound(s, 4));
  v.require(best == 6, "table maximum at n = 4 is " + std::to_string(best));
  if (v.pass) v.detail = "10 instances per row within (x,q) n, two primes n (table n+1), multiple n+2, scroll 2; max at n = 4 is 6";
  return v;
}

Verdict criterion10(const Campaign& c) {
  Verdict v;
  int resolved = 0;
  for (const auto& r : c.instances) {
    const auto I = document_ideal(r.document);
    v.require(resolution_sound(I), "resolution check fails on instance seed " + std::to_string(r.seed));
    ++resolved;
  }
  std::mt19937_64 rng(1010);
  for (int t = 0; t < 100; ++t) {
    const auto& r = c.instances[static_cast<std::size_t>(t) % c.instances.size()];
    const auto I = document_ideal(r.document);
    auto gens = I.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    const GFIdeal J(I.ring(), gens);
    v.require(I.groebner() == J.groebner(), "reduced basis depends on generator order");
    ++resolved;
    if (t < 20) v.require(resolution_sound(J), "resolution check fails after permutation");
  }
  for (int n = 2; n <= 5; ++n) v.require(resolution_sound(tight_family(n, kP)), "tight family resolution check");
  if (v.pass)
    v.detail = std::to_string(c.instances.size()) +
               " resolutions minimal with d^2 = 0 and matching Hilbert numerators; 100 permutations keep the basis";
  return v;
}

Verdict criterion11() {
  Verdict v;
  GeneratorConfig cfg;
  cfg.characteristic = kP;
  int negative = 0, by_height[4] = {0, 0, 0, 0};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const auto inst = random_quadric_ideal(Family::mixed_height, n, 1100 + seed, cfg);
    const auto q = explore_question2(inst.ideal);
    if (q.height >= 1 && q.height <= 3) ++by_height[q.height];
    if (q.slack < 0) {
      ++negative;
      std::cout << "  finding: negative slack " << q.slack << " for\n" << ideal_document(inst.ideal) << "\n";
    }
  }
  std::ostringstream s;
  s << "100 instances (heights 1/2/3: " << by_height[1] << "/" << by_height[2] << "/" << by_height[3] << "), "
    << negative << " with negative slack";
  v.detail = s.str();
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path fixtures = argc > 1 ? argv[1] : PDQUAD_FIXTURE_DIR;
  int failures = 0;
  auto report = [&](int id, const std::function<Verdict()>& fn) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    if (!v.pass) ++failures;
    std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail << "  ["
              << std::fixed << std::setprecision(1) << seconds_since(t0) << " s]" << std::endl;
  };

  report(1, criterion1);
  Campaign campaign;
  report(2, [&] {
    campaign = main_campaign();
    return criterion2(campaign);
  });
  report(3, [&] { return criterion3(campaign); });
  report(4, criterion4);
  report(5, criterion5);
  report(6, criterion6);
  report(7, [&] { return criterion7(fixtures); });
  report(8, criterion8);
  report(9, criterion9);
  report(10, [&] { return criterion10(campaign); });
  report(11, criterion11);
  return failures == 0 ? 0 : 1;
}
