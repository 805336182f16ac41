#include "pdquad/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdquad/document.hpp"
#include "pdquad/lab.hpp"
#include "pdquad/parse.hpp"

namespace pdquad::cli {
namespace {

using json = nlohmann::json;
using GF = PrimeField;

json envelope(const std::string& command) { return json{{"schema_version", kSchemaVersion}, {"command", command}}; }

json betti_json(const BettiTable& b) {
  json rows = json::array();
  for (const auto& [key, value] : b.entries()) rows.push_back({key.first, key.second, value});
  return rows;
}

template <class F>
json strings(const std::vector<Polynomial<F>>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

json report_json(const lab::BoundReport& r) {
  return {{"instance", r.instance}, {"n", r.n},         {"height", r.height}, {"pd", r.pd},
          {"bound", r.bound},       {"source", r.source}, {"pass", r.pass},    {"theorem_backed", r.theorem_backed}};
}

json question2_json(const lab::Question2Record& q) {
  return {{"pd", q.pd}, {"height", q.height}, {"n", q.n}, {"bound", q.bound}, {"slack", q.slack}};
}

json instance_json(const lab::InstanceResult& r, bool with_document) {
  json j{{"index", r.index},   {"seed", r.seed}, {"family", lab::to_string(r.family)},
         {"status", r.status}, {"n", r.n},       {"height", r.height},
         {"pd", r.pd},         {"multiplicity", r.multiplicity}, {"multiplicity_ok", r.multiplicity_ok}};
  if (!r.message.empty()) j["message"] = r.message;
  j["type"] = r.type ? json(*r.type) : json(nullptr);
  if (r.status == "ok") j["question2"] = question2_json(r.question2);
  json reps = json::array();
  for (const auto& b : r.reports) reps.push_back(report_json(b));
  j["reports"] = reps;
  if (with_document) j["document"] = r.document;
  return j;
}

json summary_json(const lab::CampaignSummary& s) {
  const auto& c = s.config;
  json max_pd = json::object();
  for (const auto& [n, pd] : s.max_pd_by_n) max_pd[std::to_string(n)] = pd;
  json failures = json::array(), slack = json::array(), instances = json::array();
  for (const auto& r : s.failures) failures.push_back(instance_json(r, true));
  for (const auto& r : s.negative_slack) slack.push_back(instance_json(r, true));
  for (const auto& r : s.results) instances.push_back(instance_json(r, false));
  return {{"config",
           {{"seed", c.seed},
            {"trials", c.trials},
            {"n_range", {c.n_min, c.n_max}},
            {"vars", c.num_vars},
            {"characteristic", c.characteristic},
            {"family", lab::to_string(c.family)}}},
          {"generated", s.generated},
          {"generation_errors", s.generation_errors},
          {"skipped", s.skipped},
          {"checks", s.checks},
          {"passed", s.passed},
          {"failed", s.failed},
          {"multiplicity_violations", s.multiplicity_violations},
          {"max_pd_by_n", max_pd},
          {"failures", failures},
          {"negative_slack", slack},
          {"instances", instances},
          {"ok", s.ok()}};
}

/// Raised for usage problems detected after option parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
      ss << in_.rdbuf();
    } else {
      std::ifstream f(path);
      if (!f) throw UsageError("cannot open '" + path + "'");
      ss << f.rdbuf();
    }
    source_ = path == "-" ? "<stdin>" : path;
    return ss.str();
  }

  AnyDocument load(const std::string& path) { return parse_document(read_input(path)); }

  IdealDocument<GF> load_prime_field(const std::string& path, const std::string& command) {
    auto doc = load(path);
    if (auto* gf = std::get_if<IdealDocument<GF>>(&doc)) return *gf;
    throw UnsupportedError("'" + command + "' works over prime fields GF(p) only");
  }

  const std::string& source() const { return source_; }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  int pd(const std::string& path) {
    return std::visit(
        [&](const auto& doc) {
          const auto b = minimal_free_resolution(doc.ideal()).betti();
          json j = envelope("pd");
          j["pd"] = b.projective_dimension();
          j["n"] = b.total(1);
          emit(j);
          return kOk;
        },
        load(path));
  }

  int resolve(const std::string& path) {
    return std::visit(
        [&](const auto& doc) {
          const auto res = minimal_free_resolution(doc.ideal());
          const auto b = res.betti();
          json ranks = json::array();
          for (const auto& m : res.modules()) ranks.push_back(m.rank());
          json j = envelope("resolve");
          j["betti"] = betti_json(b);
          j["ranks"] = ranks;
          j["pd"] = b.projective_dimension();
          j["n"] = b.total(1);
          j["hilbert_numerator"] = b.hilbert_numerator();
          emit(j);
          return kOk;
        },
        load(path));
  }

  int mult(const std::string& path) {
    return std::visit(
        [&](const auto& doc) {
          const auto I = doc.ideal();
          const auto h = hilbert(I);
          json j = envelope("mult");
          j["dimension"] = h.dimension;
          j["height"] = static_cast<int>(doc.ring->num_variables()) - h.dimension;
          j["multiplicity"] = h.multiplicity;
          j["hilbert_numerator"] = h.numerator;
          emit(j);
          return kOk;
        },
        load(path));
  }

  int colon(const std::string& path, const std::string& by) {
    return std::visit(
        [&](const auto& doc) {
          using F = typename std::decay_t<decltype(doc)>::Field;
          std::vector<Polynomial<F>> divisors;
          for (const auto& item : split_top_level(by)) {
            try {
              divisors.push_back(parse_polynomial(doc.ring, item.text, 1, item.column));
            } catch (const ParseError& e) {
              throw UsageError("--by " + std::string(e.what()));
            }
          }
          const Ideal<F> J(doc.ring, divisors);
          const auto Q = ideal_quotient(doc.ideal(), J);
          json j = envelope("colon");
          j["by"] = strings(J.generators());
          j["gens"] = strings(Q.generators());
          j["document"] = print_document(make_document(Q));
          emit(j);
          return kOk;
        },
        load(path));
  }

  int classify_matrix(const std::string& path) {
    return std::visit(
        [&](const auto& doc) {
          if (!doc.matrix) throw UsageError(source_ + ": the document has no matrix block");
          const auto& M = *doc.matrix;
          const auto& K = doc.ring->field();
          const auto report = canonical_form(M);
          json ops = json::array();
          for (const auto& op : report.log) ops.push_back(op_json(op, K));
          json rows = json::array();
          for (std::size_t r = 0; r < 2; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < report.matrix.num_columns(); ++c)
              row.push_back(report.matrix.entry(r, c).to_string());
            rows.push_back(row);
          }
          json j = envelope("classify-matrix");
          j["type"] = to_string(report.type);
          j["matrix"] = rows;
          j["lambda"] = report.lambda ? json(K.to_string(*report.lambda)) : json(nullptr);
          j["ops"] = ops;
          j["replay_ok"] = replay(report.log, M) == report.matrix;
          j["ideal_preserved"] = ideal_from_minors(report.matrix) == ideal_from_minors(M);
          j["satisfies_type"] = satisfies_type(report);
          emit(j);
          return kOk;
        },
        load(path));
  }

  int type(const std::string& path) {
    const auto doc = load_prime_field(path, "type");
    if (doc.primes.empty()) throw UsageError(source_ + ": 'type' needs a primes block");
    const auto I = doc.ideal();
    const auto sig = lab::classify_type(I, doc.prime_ideals());
    const auto b = minimal_free_resolution(I).betti();
    const int n = static_cast<int>(b.total(1)), pd = b.projective_dimension();
    json pairs = json::array();
    for (auto [e, l] : sig.pairs) pairs.push_back({{"e", e}, {"lambda", l}});
    json j = envelope("type");
    j["type"] = sig.to_string();
    j["pairs"] = pairs;
    j["n"] = n;
    j["pd"] = pd;
    bool pass = true;
    const auto& known = lab::known_signatures();
    if (n >= 3 && std::find(known.begin(), known.end(), sig) != known.end()) {
      const int bound = lab::table_bound(sig, n);
      pass = pd <= bound;
      j["bound"] = bound;
      j["pass"] = pass;
    } else {
      j["bound"] = nullptr;
      j["pass"] = nullptr;
    }
    emit(j);
    return pass ? kOk : kViolation;
  }

  int verify(const std::string& path) {
    const auto doc = load_prime_field(path, "verify");
    const auto I = doc.ideal();
    const auto main = lab::verify_main_bound(I, source_);
    const auto ctx = lab::infer_context(I, doc.prime_ideals(), doc.matrix);
    std::vector<lab::BoundReport> reports{main};
    const auto cases = lab::verify_case_bounds(I, ctx, source_);
    reports.insert(reports.end(), cases.begin(), cases.end());
    bool pass = true;
    json reps = json::array();
    for (const auto& r : reports) {
      reps.push_back(report_json(r));
      if (r.theorem_backed && !r.pass) pass = false;
    }
    json j = envelope("verify");
    j["n"] = main.n;
    j["height"] = main.height;
    j["pd"] = main.pd;
    j["multiplicity"] = multiplicity(I);
    j["reports"] = reps;
    j["pass"] = pass;
    emit(j);
    return pass ? kOk : kViolation;
  }

  int question2(const std::string& path) {
    const auto doc = load_prime_field(path, "question2");
    const auto q = lab::explore_question2(doc.ideal());
    json j = envelope("question2");
    j.update(question2_json(q));
    j["negative_slack"] = q.slack < 0;
    emit(j);
    return kOk;
  }

  int tight(int n, std::uint32_t characteristic) {
    out_ << print_document(make_document(lab::tight_family(n, characteristic)));
    return kOk;
  }

  int fuzz(const lab::FuzzConfig& config) {
    const auto summary = lab::fuzz_campaign(config);
    json j = envelope("fuzz");
    j.update(summary_json(summary));
    emit(j);
    if (!summary.ok()) return kViolation;
    for (const auto& r : summary.results)
      if (r.status == "error") return kUsageError;
    return kOk;
  }

 private:
  template <class F>
  static json op_json(const ElementaryOp<F>& op, const F& K) {
    json j{{"describe", op.describe(K)}};
    auto elems = [&](const auto& v) {
      json a = json::array();
      for (const auto& e : v) a.push_back(K.to_string(e));
      return a;
    };
    switch (op.kind) {
      case ElementaryOp<F>::Kind::row_op:
        j["kind"] = "row";
        j["P"] = elems(op.P);
        break;
      case ElementaryOp<F>::Kind::column_combine:
        j["kind"] = "combine";
        j["target"] = op.target;
        j["coefficients"] = elems(op.coefficients);
        break;
      case ElementaryOp<F>::Kind::add_first:
        j["kind"] = "add-first";
        j["target"] = op.target;
        j["scalar"] = K.to_string(op.scalar);
        break;
      case ElementaryOp<F>::Kind::permute:
        j["kind"] = "permute";
        j["permutation"] = op.permutation;
        break;
    }
    return j;
  }

  std::istream& in_;
  std::ostream& out_;
  std::string source_ = "<input>";
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--n-range expects A..B, got '" + text + "'");
  }
}

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projective dimension experiments for ideals of quadrics", "pdquad"};
  app.require_subcommand(1);
  std::uint64_t global_seed = 1;
  app.add_option("--seed", global_seed, "Seed for every randomized command");

  Runner runner(in, out);
  std::string file = "-";
  auto add_file_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Ideal document, '-' for standard input");
    return sub;
  };
  auto* pd = add_file_command("pd", "Projective dimension of R/I");
  auto* resolve = add_file_command("resolve", "Minimal free resolution and Betti table");
  auto* mult = add_file_command("mult", "Dimension, height and multiplicity");
  auto* colon = add_file_command("colon", "Ideal quotient I : (f1, ..., fk)");
  std::string by;
  colon->add_option("--by", by, "Comma-separated polynomials")->required();
  auto* classify = add_file_command("classify-matrix", "Canonical form of the matrix block");
  auto* type = add_file_command("type", "Type signature from the primes block");
  auto* verify = add_file_command("verify", "Check the main bound and every applicable case bound");
  auto* question2 = add_file_command("question2", "Compare pd with h(n - h + 1)");

  std::uint32_t characteristic = 0;
  auto* tight = app.add_subcommand("tight", "Print the tight family as a document");
  int tight_n = 0;
  tight->add_option("--n", tight_n, "Number of generators")->required();
  tight->add_option("--char", characteristic, "Prime characteristic");

  auto* fuzz = app.add_subcommand("fuzz", "Seeded campaign checking every bound");
  lab::FuzzConfig config;
  std::optional<std::uint64_t> fuzz_seed;
  std::string family = "generic", range = "3..3";
  fuzz->add_option("--seed", fuzz_seed, "Campaign seed");
  fuzz->add_option("--trials", config.trials, "Number of instances")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--family", family, "generic, in-linear-prime, in-(x,q), in-scroll, two-linear-primes, "
                                       "multiple-structure, canonical-form-type, mixed, mixed-height");
  fuzz->add_option("--n-range", range, "Generator counts A..B");
  fuzz->add_option("--vars", config.num_vars, "Number of variables")->check(CLI::PositiveNumber);
  fuzz->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  fuzz->add_option("--char", characteristic, "Prime characteristic");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    auto field_char = [&] { return characteristic ? characteristic : lab::default_characteristic(); };
    if (characteristic && !is_prime(characteristic)) throw UsageError("--char must be a prime");
    if (pd->parsed()) return runner.pd(file);
    if (resolve->parsed()) return runner.resolve(file);
    if (mult->parsed()) return runner.mult(file);
    if (colon->parsed()) return runner.colon(file, by);
    if (classify->parsed()) return runner.classify_matrix(file);
    if (type->parsed()) return runner.type(file);
    if (verify->parsed()) return runner.verify(file);
    if (question2->parsed()) return runner.question2(file);
    if (tight->parsed()) return runner.tight(tight_n, field_char());
    if (fuzz->parsed()) {
      config.seed = fuzz_seed.value_or(global_seed);
      config.family = lab::parse_family(family);
      std::tie(config.n_min, config.n_max) = parse_range(range);
      if (config.n_min < 1 || config.n_max < config.n_min) throw UsageError("--n-range needs 1 <= A <= B");
      config.characteristic = field_char();
      return runner.fuzz(config);
    }
  } catch (const ParseError& e) {
    err << "pdquad: " << runner.source() << ":" << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "pdquad: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "pdquad: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "pdquad: internal error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  // Option defaults read the environment, which can fail before any command runs.
  try {
    return run_command(args, in, out, err);
  } catch (const std::exception& e) {
    err << "pdquad: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace pdquad::cli
