#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tsl/enumerate.hpp"
#include "tsl/eval.hpp"
#include "tsl/harness.hpp"
#include "tsl/ledger.hpp"
#include "tsl/serialize.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

// JSON crosses the boundary as text and is decoded by the Python json module.
py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_python(const py::object& o) {
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::vector<int> indices(tsl::Subset s) { return s.elements(); }

tsl::Subset subset(const tsl::FiniteSpace& space, const std::vector<int>& elements) {
  return tsl::subset_from_json(json(elements), space.size());
}

tsl::FiniteSpace make_space(int n, const std::vector<std::vector<int>>& opens) {
  std::vector<tsl::Subset> family;
  for (const auto& u : opens) family.push_back(tsl::subset_from_json(json(u), n));
  return tsl::FiniteSpace::make(n, family);
}

tsl::TopSemilattice model_from(const py::object& model) { return tsl::parse_space(from_python(model)).model(); }

py::list reports(const std::vector<tsl::ClaimReport>& rs) {
  py::list out;
  for (const auto& r : rs) out.append(to_python(tsl::to_json(r)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite topologized semilattices: closures, completeness, claim checks";

  py::register_exception<tsl::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<tsl::UsageError>(m, "UsageError", PyExc_ValueError);

  py::class_<tsl::FiniteSpace>(m, "FiniteSpace")
      .def(py::init(&make_space), py::arg("n"), py::arg("opens"))
      .def_static("discrete", &tsl::FiniteSpace::discrete)
      .def_static("indiscrete", &tsl::FiniteSpace::indiscrete)
      .def_property_readonly("size", &tsl::FiniteSpace::size)
      .def_property_readonly("opens",
                             [](const tsl::FiniteSpace& s) {
                               std::vector<std::vector<int>> out;
                               for (auto u : s.opens()) out.push_back(indices(u));
                               return out;
                             })
      .def("min_nbhd", [](const tsl::FiniteSpace& s, int x) { return indices(s.min_nbhd(x)); })
      .def("is_open", [](const tsl::FiniteSpace& s, const std::vector<int>& a) { return s.is_open(subset(s, a)); })
      .def("is_closed", [](const tsl::FiniteSpace& s, const std::vector<int>& a) { return s.is_closed(subset(s, a)); })
      .def("to_json", [](const tsl::FiniteSpace& s) { return to_python(tsl::space_to_json(s)); });

  m.def(
      "closure",
      [](const tsl::FiniteSpace& s, const std::vector<int>& a, const std::string& mode) {
        return indices(tsl::closure_of(s, subset(s, a), tsl::parse_closure_mode(mode)));
      },
      py::arg("space"), py::arg("subset"), py::arg("mode") = "plain");
  m.def("interior", [](const tsl::FiniteSpace& s, const std::vector<int>& a) {
    return indices(tsl::interior_of(s, subset(s, a)));
  });
  m.def("separation", [](const tsl::FiniteSpace& s, const std::string& prop) {
    return tsl::separation(s, tsl::parse_separation(prop));
  });
  m.def("is_h_set", [](const tsl::FiniteSpace& s, const std::vector<int>& a) { return tsl::is_H_set(s, subset(s, a)); });

  m.def("enumerate_topologies", [](int n) {
    py::list out;
    for (const auto& s : tsl::enumerate_topologies(n)) out.append(s);
    return out;
  });
  m.def("count_topologies_by_families", &tsl::count_topologies_by_families);
  m.def("enumerate_meet_tables", [](int n) {
    std::vector<tsl::RawTable> out;
    for (const auto& t : tsl::enumerate_meet_tables(n)) out.push_back(t.rows());
    return out;
  });
  m.def("enumerate_models", [](int n) {
    py::list out;
    for (const auto& ts : tsl::enumerate_models(n)) out.append(to_python(tsl::model_to_json(ts)));
    return out;
  });

  m.def(
      "is_complete", [](const py::object& model, const std::string& mode) {
        return tsl::is_complete(model_from(model), tsl::parse_closure_mode(mode));
      },
      py::arg("model"), py::arg("mode") = "plain");
  m.def(
      "is_updown_closed", [](const py::object& model, const std::string& mode) {
        return tsl::is_updown_closed(model_from(model), tsl::parse_closure_mode(mode));
      },
      py::arg("model"), py::arg("mode") = "plain");
  m.def("is_semitopological", [](const py::object& model) { return tsl::is_semitopological(model_from(model)); });
  m.def("is_topological", [](const py::object& model) { return tsl::is_topological(model_from(model)); });

  m.def(
      "eval_op",
      [](const py::object& file, const std::string& op, std::optional<std::string> set,
         std::optional<std::string> mode) {
        return to_python(tsl::eval_op(tsl::parse_space(from_python(file)), op, tsl::EvalArgs{set, mode}));
      },
      py::arg("space"), py::arg("op"), py::arg("set") = py::none(), py::arg("mode") = py::none());

  m.def(
      "run_claim_suite",
      [](const std::string& suite, int n_max) { return reports(tsl::run_claim_suite(tsl::parse_suite(suite), n_max)); },
      py::arg("suite"), py::arg("n_max") = 3);
  m.def(
      "find_witness",
      [](const std::string& target, int n_max) {
        return to_python(tsl::to_json(tsl::find_witness(tsl::parse_witness_target(target), n_max)));
      },
      py::arg("target"), py::arg("n_max") = 3);
  m.def("run_ledger", [](int example) {
    py::list out;
    for (const auto& e : tsl::run_ledger(example)) out.append(to_python(tsl::to_json(e)));
    return out;
  });
}
