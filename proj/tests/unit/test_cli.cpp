#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "pdquad/cli.hpp"
#include "pdquad/document.hpp"
#include "pdquad/lab.hpp"

using namespace pdquad;
using namespace testing_support;
using json = nlohmann::json;

namespace {

const std::filesystem::path kFixtures = PDQUAD_FIXTURE_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (kFixtures / name).string(); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("tight | pd gives 2n - 2") {
  for (int k = 2; k <= 6; ++k) {
    CAPTURE(k);
    const auto doc = run({"tight", "--n", std::to_string(k)});
    REQUIRE(doc.code == 0);
    const auto pd = run({"pd", "-"}, doc.out);
    REQUIRE(pd.code == 0);
    CHECK(pd.report()["pd"] == 2 * k - 2);
    CHECK(pd.report()["n"] == k);
    CHECK(pd.report()["schema_version"] == cli::kSchemaVersion);
  }
  CHECK(run({"pd"}, run({"tight", "--n", "3"}).out).report()["pd"] == 4);
}

TEST_CASE("document parsing") {
  auto doc = parse_document("ring GF(7)[x,y]\ngens: x^2, y^2\n");
  auto& gf = std::get<IdealDocument<PrimeField>>(doc);
  CHECK(gf.gens.size() == 2);
  CHECK(gf.ring->order().name() == "grevlex");

  try {
    (void)parse_document("ring GF(7)[x,y]\ngens: x^2, y*z\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 14);
    CHECK(std::string(e.what()).find("'z'") != std::string::npos);
  }

  auto tight = std::get<IdealDocument<PrimeField>>(parse_document(slurp(kFixtures / "tight_n4.ideal")));
  CHECK(tight.ideal() == Ideal<PrimeField>(tight.ring, lab::tight_family(4, 32003).generators()));

  auto qq = parse_document("ring QQ[a,b]\norder lex\ngens: a^2 - 1/3*b^2\n");
  REQUIRE(std::holds_alternative<IdealDocument<RationalField>>(qq));
  CHECK(print_document(qq) == "ring QQ[a,b]\norder lex\ngens: a^2 - 1/3*b^2\n");

  auto multi = std::get<IdealDocument<PrimeField>>(parse_document("ring GF(5)[x]\ngens: x,\n  x^2,\n  x^3\n"));
  CHECK(multi.gens.size() == 3);

  CHECK_THROWS_AS(parse_document("ring GF(5)[x]\n"), ParseError);
  CHECK_THROWS_AS(parse_document("ring GF(5)[x,x]\ngens: x\n"), ParseError);
  CHECK_THROWS_AS(parse_document("ring RR[x]\ngens: x\n"), ParseError);
  CHECK_THROWS_AS(parse_document("ring GF(5)[x]\norder revlex\ngens: x\n"), ParseError);
  CHECK_THROWS_AS(parse_document("ring GF(5)[x]\ngens: x, , x\n"), ParseError);
  CHECK_THROWS_AS(parse_document("ring GF(5)[x,y]\nmatrix:\n  x\n"), ParseError);
  CHECK_THROWS_AS(parse_document("  x\nring GF(5)[x]\n"), ParseError);
}

TEST_CASE("parse, print, parse is stable on every fixture") {
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".ideal") continue;
    CAPTURE(entry.path().string());
    const auto first = print_document(parse_document(slurp(entry.path())));
    CHECK(print_document(parse_document(first)) == first);
  }
}

TEST_CASE("classify-matrix on the shape fixtures") {
  const std::vector<std::pair<std::string, std::string>> expected{{"t1_one_generic.ideal", "T1"},
                                                                  {"t2_one_zero.ideal", "T2"},
                                                                  {"t3_four_quadrics.ideal", "T3"},
                                                                  {"t4_both_rows.ideal", "T4"},
                                                                  {"t5_lambda.ideal", "T5"}};
  for (const auto& [file, tag] : expected) {
    CAPTURE(file);
    const auto r = run({"classify-matrix", fixture(file)});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    CHECK(j["type"] == tag);
    CHECK(j["replay_ok"] == true);
    CHECK(j["ideal_preserved"] == true);
    CHECK(j["satisfies_type"] == true);
  }
  const auto t5 = run({"classify-matrix", fixture("t5_lambda.ideal")}).report();
  CHECK(t5["lambda"] == "16001");  // 2 * 16001 = -1 mod 32003
  CHECK(run({"classify-matrix", fixture("tight_n4.ideal")}).code == cli::kUsageError);
}

TEST_CASE("verify reports") {
  auto scroll = run({"verify", fixture("scroll.ideal")});
  REQUIRE(scroll.code == 0);
  auto j = scroll.report();
  CHECK(j["pd"] == 2);
  CHECK(j["pass"] == true);
  bool saw_scroll = false;
  for (const auto& r : j["reports"])
    if (r["source"] == "scroll-prime") saw_scroll = r["bound"] == 2 && r["pass"] == true;
  CHECK(saw_scroll);

  j = run({"verify", fixture("tight_n4.ideal")}).report();
  CHECK(j["pd"] == 6);
  CHECK(j["reports"][0]["bound"] == 6);

  j = run({"verify", fixture("two_linear_primes.ideal")}).report();
  for (const auto& r : j["reports"]) CHECK(r["pass"] == true);

  const auto low = run({"verify", "-"}, "ring GF(7)[x,y,z]\ngens: x^2, y^2, z^2\n");
  CHECK(low.code == cli::kUsageError);
  CHECK(low.err.find("height two") != std::string::npos);
  CHECK(run({"verify", fixture("rational.ideal")}).code == cli::kUsageError);
}

TEST_CASE("other commands") {
  auto j = run({"resolve", fixture("tight_n4.ideal")}).report();
  CHECK(j["pd"] == 6);
  CHECK(j["betti"][0] == json::array({0, 0, 1}));
  CHECK(j["ranks"][1] == 4);

  j = run({"mult", fixture("scroll.ideal")}).report();
  CHECK(j["multiplicity"] == 3);
  CHECK(j["height"] == 2);

  const auto tight3 = run({"tight", "--n", "3"}).out;
  j = run({"colon", "-", "--by", "x*y"}, tight3).report();
  const auto Q = std::get<IdealDocument<PrimeField>>(parse_document(j["document"].get<std::string>())).ideal();
  CHECK(Q == Id(Q.ring(), {"x", "y", "a11", "a21"}));
  CHECK(run({"colon", "-", "--by", "q"}, tight3).code == cli::kUsageError);

  j = run({"type", fixture("t3_four_quadrics.ideal")}).report();
  CHECK(j["type"] == "<1;1>");
  CHECK(j["pass"] == true);
  CHECK(run({"type", fixture("t1_one_generic.ideal")}).code == cli::kUsageError);

  j = run({"question2", fixture("tight_n4.ideal")}).report();
  CHECK(j["slack"] == 0);
  CHECK(j["negative_slack"] == false);

  j = run({"pd", fixture("rational.ideal")}).report();
  CHECK(j["pd"].get<int>() >= 2);
}

TEST_CASE("exit codes and diagnostics") {
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures / "bad")) {
    CAPTURE(entry.path().string());
    const auto r = run({"pd", entry.path().string()});
    CHECK(r.code == cli::kUsageError);
    CHECK(r.out.empty());
    CHECK(r.err.find(entry.path().string() + ":") != std::string::npos);
  }
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"tight"}).code == cli::kUsageError);
  CHECK(run({"tight", "--n", "1"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"pd", "/nonexistent/file"}).code == cli::kUsageError);
  CHECK(run({"fuzz", "--n-range", "4..2"}).code == cli::kUsageError);
  CHECK(run({"fuzz", "--family", "nope"}).code == cli::kUsageError);
  CHECK(run({"fuzz", "--char", "9"}).code == cli::kUsageError);
}

TEST_CASE("malformed documents never crash") {
  std::mt19937_64 rng(8);
  std::vector<std::string> corpus;
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures))
    if (entry.path().extension() == ".ideal") corpus.push_back(slurp(entry.path()));
  const std::string alphabet = "xyzab0129+-*^/(),:[]# \n\tGFQ";
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = corpus[trial % corpus.size()];
    const int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits && !text.empty(); ++e) {
      const std::size_t at = rng() % text.size();
      switch (rng() % 3) {
        case 0: text.erase(at, 1); break;
        case 1: text.insert(text.begin() + static_cast<long>(at), alphabet[rng() % alphabet.size()]); break;
        default: text[at] = alphabet[rng() % alphabet.size()]; break;
      }
    }
    CAPTURE(text);
    const auto r = run({"mult", "-"}, text);
    CHECK((r.code == cli::kOk || r.code == cli::kUsageError));
    if (r.code != cli::kOk) CHECK(!r.err.empty());
  }
}

TEST_CASE("fuzz output is stable") {
  const std::vector<std::string> args{"fuzz", "--seed", "11", "--trials", "6", "--family", "mixed", "--n-range",
                                      "3..4"};
  const auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto parallel = args;
  parallel.insert(parallel.end(), {"--jobs", "2"});
  CHECK(run(parallel).out == a.out);
  const auto j = a.report();
  CHECK(j["failed"] == 0);
  CHECK(j["instances"].size() == 6);
  CHECK(j["config"]["n_range"] == json::array({3, 4}));

  // --seed before the command feeds the campaign too.
  CHECK(run({"--seed", "11", "fuzz", "--trials", "6", "--family", "mixed", "--n-range", "3..4"}).out == a.out);

  const auto empty = run({"fuzz", "--trials", "0"});
  CHECK(empty.code == 0);
  CHECK(empty.report()["ok"] == true);
}

TEST_CASE("characteristic from the environment") {
  ::setenv("PDQUAD_CHARACTERISTIC", "101", 1);
  CHECK(run({"tight", "--n", "2"}).out.rfind("ring GF(101)[x,y]", 0) == 0);
  ::setenv("PDQUAD_CHARACTERISTIC", "100", 1);
  CHECK(run({"tight", "--n", "2"}).code == cli::kUsageError);
  ::unsetenv("PDQUAD_CHARACTERISTIC");
  CHECK(run({"tight", "--n", "2", "--char", "13"}).out.rfind("ring GF(13)", 0) == 0);
}
