// Python bindings over prime fields.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pdquad/cli.hpp"
#include "pdquad/document.hpp"
#include "pdquad/lab.hpp"
#include "pdquad/parse.hpp"

namespace py = pybind11;
using namespace pdquad;
using GF = PrimeField;
using GFIdeal = Ideal<GF>;

namespace {

std::vector<std::string> strings(const std::vector<Polynomial<GF>>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

GFIdeal from_text(const RingPtr<GF>& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial<GF>> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(R, g));
  return GFIdeal(R, std::move(ps));
}

GFIdeal make_ideal(const std::vector<std::string>& variables, const std::vector<std::string>& gens,
                   std::uint32_t characteristic) {
  return from_text(make_ring(GF(characteristic), variables), gens);
}

GFIdeal parse_ideal(const std::string& text) {
  auto doc = parse_document(text);
  if (auto* gf = std::get_if<IdealDocument<GF>>(&doc)) return gf->ideal();
  throw UnsupportedError("the Python bindings work over GF(p) only");
}

py::dict betti_dict(const BettiTable& b) {
  py::dict d;
  for (const auto& [key, value] : b.entries()) d[py::make_tuple(key.first, key.second)] = value;
  return d;
}

py::dict report_dict(const lab::BoundReport& r) {
  py::dict d;
  d["instance"] = r.instance;
  d["n"] = r.n;
  d["height"] = r.height;
  d["pd"] = r.pd;
  d["bound"] = r.bound;
  d["source"] = r.source;
  d["passed"] = r.pass;
  return d;
}

py::dict question2_dict(const lab::Question2Record& q) {
  py::dict d;
  d["pd"] = q.pd;
  d["height"] = q.height;
  d["n"] = q.n;
  d["bound"] = q.bound;
  d["slack"] = q.slack;
  return d;
}

std::vector<GFIdeal> primes_in(const GFIdeal& I, const std::vector<std::vector<std::string>>& primes) {
  std::vector<GFIdeal> out;
  for (const auto& p : primes) out.push_back(from_text(I.ring(), p));
  return out;
}

}  // namespace

PYBIND11_MODULE(_pdquad, m) {
  m.doc() = "Ideals of quadrics: resolutions, canonical forms and projective dimension bounds";

  // Translators run newest first, so the base class is registered first.
  auto base = py::register_exception<Error>(m, "PdquadError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ClassificationError>(m, "ClassificationError", base.ptr());
  py::register_exception<GenerationError>(m, "GenerationError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ArgumentError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<GFIdeal>(m, "Ideal")
      .def(py::init(&make_ideal), py::arg("variables"), py::arg("generators"),
           py::arg("characteristic") = kDefaultCharacteristic)
      .def_static("parse", &parse_ideal, py::arg("document"), "Ideal from document text")
      .def_property_readonly("variables", [](const GFIdeal& I) { return I.ring()->variable_names(); })
      .def_property_readonly("characteristic", [](const GFIdeal& I) { return I.ring()->field().characteristic(); })
      .def_property_readonly("generators", [](const GFIdeal& I) { return strings(I.generators()); })
      .def("groebner_basis", [](const GFIdeal& I) { return strings(I.groebner().elements()); })
      .def("minimal_generators", [](const GFIdeal& I) { return strings(minimal_generators(I)); })
      .def("contains", [](const GFIdeal& I, const std::string& f) { return I.contains(parse_polynomial(I.ring(), f)); })
      .def("height", [](const GFIdeal& I) { return height(I); })
      .def("dimension", [](const GFIdeal& I) { return dimension(I); })
      .def("multiplicity", [](const GFIdeal& I) { return multiplicity(I); })
      .def("betti", [](const GFIdeal& I) { return betti_dict(minimal_free_resolution(I).betti()); })
      .def("projective_dimension", [](const GFIdeal& I) { return projective_dimension(I); })
      .def("is_socle_element",
           [](const GFIdeal& I, const std::string& f) { return is_socle_element(parse_polynomial(I.ring(), f), I); })
      .def("colon",
           [](const GFIdeal& I, const std::vector<std::string>& by) { return ideal_quotient(I, from_text(I.ring(), by)); })
      .def("document", [](const GFIdeal& I) { return print_document(make_document(I)); })
      .def("__eq__", [](const GFIdeal& a, const GFIdeal& b) { return a == b; })
      .def("__repr__", [](const GFIdeal& I) { return "Ideal(" + I.to_string() + ")"; });

  m.def("tight_family", &lab::tight_family, py::arg("n"), py::arg("characteristic") = kDefaultCharacteristic);
  m.def("scroll_ideal", &lab::scroll_ideal, py::arg("characteristic") = kDefaultCharacteristic);

  m.def(
      "canonical_form",
      [](const std::string& document) {
        auto doc = parse_document(document);
        auto* gf = std::get_if<IdealDocument<GF>>(&doc);
        if (!gf || !gf->matrix) throw ArgumentError("expected a GF(p) document with a matrix block");
        const auto r = canonical_form(*gf->matrix);
        const auto& K = gf->ring->field();
        py::dict d;
        d["type"] = to_string(r.type);
        d["matrix"] = r.matrix.to_string();
        d["lambda"] = r.lambda ? py::object(py::str(K.to_string(*r.lambda))) : py::object(py::none());
        std::vector<std::string> ops;
        for (const auto& op : r.log) ops.push_back(op.describe(K));
        d["ops"] = ops;
        d["replay_ok"] = replay(r.log, *gf->matrix) == r.matrix;
        return d;
      },
      py::arg("document"));

  m.def(
      "classify_type",
      [](const GFIdeal& I, const std::vector<std::vector<std::string>>& primes) {
        return lab::classify_type(I, primes_in(I, primes)).to_string();
      },
      py::arg("ideal"), py::arg("primes"));
  m.def(
      "table_bound", [](const std::string& sig, int n) { return lab::table_bound(lab::TypeSignature::parse(sig), n); },
      py::arg("signature"), py::arg("n"));
  m.def(
      "verify_main_bound", [](const GFIdeal& I) { return report_dict(lab::verify_main_bound(I)); }, py::arg("ideal"));
  m.def(
      "verify",
      [](const GFIdeal& I, const std::vector<std::vector<std::string>>& primes) {
        const auto ctx = lab::infer_context(I, primes_in(I, primes));
        py::list out;
        out.append(report_dict(lab::verify_main_bound(I)));
        for (const auto& r : lab::verify_case_bounds(I, ctx)) out.append(report_dict(r));
        return out;
      },
      py::arg("ideal"), py::arg("primes") = std::vector<std::vector<std::string>>{});
  m.def("essential_variable_count", &lab::essential_variable_count, py::arg("ideal"));
  m.def(
      "explore_question2", [](const GFIdeal& I) { return question2_dict(lab::explore_question2(I)); },
      py::arg("ideal"));

  m.def(
      "fuzz",
      [](std::uint64_t seed, int trials, const std::string& family, int n_min, int n_max, int num_vars, int jobs,
         std::uint32_t characteristic) {
        lab::FuzzConfig c;
        c.seed = seed;
        c.trials = trials;
        c.family = lab::parse_family(family);
        c.n_min = n_min;
        c.n_max = n_max;
        c.num_vars = num_vars;
        c.jobs = jobs;
        c.characteristic = characteristic;
        lab::CampaignSummary s;
        {
          py::gil_scoped_release release;
          s = lab::fuzz_campaign(c);
        }
        py::dict d;
        d["generated"] = s.generated;
        d["generation_errors"] = s.generation_errors;
        d["checks"] = s.checks;
        d["passed"] = s.passed;
        d["failed"] = s.failed;
        d["multiplicity_violations"] = s.multiplicity_violations;
        d["max_pd_by_n"] = s.max_pd_by_n;
        d["ok"] = s.ok();
        py::list rows;
        for (const auto& r : s.results) {
          py::dict row;
          row["seed"] = r.seed;
          row["family"] = lab::to_string(r.family);
          row["status"] = r.status;
          row["n"] = r.n;
          row["pd"] = r.pd;
          row["multiplicity"] = r.multiplicity;
          row["document"] = r.document;
          rows.append(row);
        }
        d["instances"] = rows;
        return d;
      },
      py::arg("seed") = 1, py::arg("trials") = 10, py::arg("family") = "generic", py::arg("n_min") = 3,
      py::arg("n_max") = 3, py::arg("num_vars") = 6, py::arg("jobs") = 1,
      py::arg("characteristic") = kDefaultCharacteristic);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        const int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
