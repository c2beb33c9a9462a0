// Python bindings. Structured results cross the boundary as JSON text and
// are decoded on the Python side, so the field order matches the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xgroup/classifier.hpp"
#include "xgroup/constructors.hpp"
#include "xgroup/corpus.hpp"
#include "xgroup/document.hpp"
#include "xgroup/errors.hpp"
#include "xgroup/fingerprint.hpp"
#include "xgroup/tower.hpp"
#include "xgroup/xcheck.hpp"

namespace py = pybind11;
using namespace xgroup;

namespace {

struct PyGroup {
  Group group;
  std::string provenance;  // empty unless built by construct()
};

std::string fingerprint_json(const Group& G) {
  const auto fp = fingerprint(G);
  Doc d;
  d["order"] = fp.order;
  d["center_order"] = fp.center_order;
  d["derived_order"] = fp.derived_order;
  d["abelianization_invariants"] = fp.abelianization_invariants;
  Doc orders = Doc::object();
  for (auto [o, c] : fp.element_order_multiset) orders[std::to_string(o)] = c;
  d["element_order_multiset"] = orders;
  Doc sizes = Doc::object();
  for (auto [s, c] : fp.conjugacy_class_size_multiset) sizes[std::to_string(s)] = c;
  d["conjugacy_class_size_multiset"] = sizes;
  d["is_perfect"] = fp.is_perfect;
  d["is_simple_quotient_by_center"] = fp.is_simple_quotient_by_center;
  return d.dump();
}

TowerSpec tower_spec(const std::string& kind, std::uint64_t p, std::uint64_t d, std::uint64_t y_order, unsigned depth) {
  TowerSpec s;
  if (kind == "prufer") s.kind = TowerKind::Prufer;
  else if (kind == "prufer2_ext") s.kind = TowerKind::Prufer2Ext;
  else if (kind == "prufer_metacyclic") s.kind = TowerKind::PruferMetacyclic;
  else fail(ErrorKind::InvalidParameter, "unknown tower kind '" + kind + "'");
  s.p = p;
  s.d = d;
  s.y_order = y_order;
  s.depth = depth;
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite group engine for groups with self-centralizing non-cyclic subgroups";

  static py::exception<Error> error(m, "XGroupError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error;
      py::object inst = exc(std::string(to_string(e.kind())), e.what());
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<PyGroup>(m, "Group")
      .def_property_readonly("order", [](const PyGroup& g) { return g.group.order(); })
      .def_property_readonly("degree", [](const PyGroup& g) { return g.group.degree(); })
      .def_property_readonly("provenance_json", [](const PyGroup& g) { return g.provenance; })
      .def("document_json", [](const PyGroup& g) { return dump(group_to_doc(g.group)); })
      .def("fingerprint_json", [](const PyGroup& g) { return fingerprint_json(g.group); })
      .def("__repr__", [](const PyGroup& g) { return "<Group of order " + std::to_string(g.group.order()) + ">"; });

  m.def("families", &family_names);
  m.def(
      "construct",
      [](const std::string& family, const std::string& params) {
        auto rec = construct(family, nlohmann::json::parse(params));
        std::string prov = dump(provenance(rec));
        return PyGroup{std::move(rec.group), std::move(prov)};
      },
      py::arg("family"), py::arg("params_json"));
  m.def(
      "load",
      [](const std::string& text) { return PyGroup{group_from_text(text), {}}; }, py::arg("document_json"));
  m.def(
      "check",
      [](const PyGroup& g, const std::string& method, std::size_t cap) {
        if (method == "brute") return dump(verdict_to_doc(g.group, is_x_bruteforce(g.group, cap)));
        if (method == "recursive") return dump(verdict_to_doc(g.group, is_x_recursive(g.group, cap)));
        fail(ErrorKind::InvalidParameter, "method must be brute or recursive");
      },
      py::arg("group"), py::arg("method") = "brute", py::arg("cap") = kDefaultBruteCap);
  m.def(
      "classify",
      [](const PyGroup& g, std::size_t cap) {
        const auto tc = classify(g.group, {cap, true});
        return std::make_pair(dump(theorem_case_to_doc(g.group, tc)), explain(tc));
      },
      py::arg("group"), py::arg("cap") = kDefaultBruteCap);
  m.def(
      "tower",
      [](const std::string& kind, std::uint64_t p, std::uint64_t d, std::uint64_t y_order, unsigned depth) {
        return dump(tower_report_to_doc(verify_tower(tower_spec(kind, p, d, y_order, depth))));
      },
      py::arg("kind"), py::arg("p"), py::arg("d") = 1, py::arg("y_order") = 2, py::arg("depth") = 3);
  m.def(
      "corpus",
      [](const std::string& suite, unsigned workers) {
        CorpusOptions o;
        o.workers = workers;
        py::gil_scoped_release release;
        return dump(summary_to_doc(run_corpus(suite, builtin_suite(suite), o)));
      },
      py::arg("suite"), py::arg("workers") = 1);
}
