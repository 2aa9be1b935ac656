#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pencil/absolute.hpp"
#include "pencil/io.hpp"
#include "pencil/suites.hpp"

namespace py = pybind11;
using namespace pencil;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& o) { return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

VarNames names(const std::pair<std::string, std::string>& v) { return {v.first, v.second}; }

}  // namespace

PYBIND11_MODULE(pencil_lab, m) {
  m.doc() = "Exact analysis of polynomial pencils f - c*w over Q";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<PreconditionError> precondition_error(m, "PreconditionError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(parse_error.ptr(), e.what());
    } catch (const PreconditionError& e) {
      PyErr_SetString(precondition_error.ptr(), e.what());
    }
  });

  m.attr("SCHEMA") = kSchema;

  m.def(
      "parse",
      [](const std::string& text, const std::pair<std::string, std::string>& vars) {
        return to_python(poly_to_json(parse_polynomial(text, names(vars)), names(vars)));
      },
      py::arg("text"), py::arg("vars") = std::make_pair(std::string("X"), std::string("Y")),
      "Parse an expression into a polynomial object {vars, terms}.");

  m.def(
      "unparse", [](const py::object& poly) {
        Json j = from_python(poly);
        VarNames vars = {"X", "Y"};
        if (j.contains("vars")) vars = {j["vars"][0].get<std::string>(), j["vars"][1].get<std::string>()};
        return unparse(poly_from_json(j), vars);
      },
      py::arg("poly"), "Expression text of a polynomial object.");

  m.def(
      "analyze",
      [](const std::string& f, std::optional<std::string> w, std::vector<std::string> sets, bool rank, std::uint64_t seed) {
        AnalyzeOptions opt;
        opt.f = f;
        opt.w = std::move(w);
        opt.sets = std::move(sets);
        opt.rank = rank;
        opt.seed = seed;
        Json report;
        {
          py::gil_scoped_release release;
          report = analyze(opt);
        }
        return to_python(report);
      },
      py::arg("f"), py::arg("w") = py::none(), py::arg("sets") = std::vector<std::string>{"all"}, py::arg("rank") = false,
      py::arg("seed") = 0, "Report document for the pencil f - c*w.");

  m.def(
      "absolute_factor_count", [](const std::string& f) { return absolute_factor_count(read_polynomial(f)); }, py::arg("f"),
      "Number of absolutely irreducible factors, with multiplicity.");

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed) {
        std::vector<Fact> facts;
        {
          py::gil_scoped_release release;
          if (suite == "paper-examples") facts = suite_golden();
          else if (suite == "identities") facts = suite_identities(seed);
          else if (suite == "oracles") facts = suite_oracles(seed);
          else if (suite == "degenerate") facts = suite_degenerate();
          else throw PreconditionError("unknown suite '" + suite + "'");
        }
        Json list = Json::array();
        for (auto& f : facts) list.push_back(fact_to_json(f));
        return to_python(list);
      },
      py::arg("suite"), py::arg("seed") = 1, "Facts of a verification suite.");
}
