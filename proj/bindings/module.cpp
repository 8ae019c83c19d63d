// Python bindings for the hall2max core: group builders, BSGS queries,
// lattice summaries and the theorem verifier. Reports cross the
// boundary as plain dicts (via JSON) so python callers need no custom
// types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "h2m/constructors.hpp"
#include "h2m/report.hpp"

namespace py = pybind11;
using namespace h2m;

namespace {

py::object json_to_py(const Json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

Caps make_caps(std::uint64_t element_cap, std::size_t degree_cap) {
  Caps caps;
  caps.element_cap = element_cap;
  caps.degree_cap = degree_cap;
  return caps;
}

}  // namespace

PYBIND11_MODULE(_pyhall2max, m) {
  m.doc() = "2-maximal Hall subgroup theorem checker";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<Perm>(m, "Perm")
      .def(py::init<std::vector<Point>>(), py::arg("images"))
      .def_static("identity", &Perm::identity, py::arg("degree"))
      .def_static("from_cycles", &Perm::from_cycles, py::arg("degree"),
                  py::arg("cycles"))
      .def_property_readonly("degree", &Perm::degree)
      .def_property_readonly("images", &Perm::images)
      .def("is_identity", &Perm::is_identity)
      .def("inverse", &Perm::inverse)
      .def("cycle_string", &Perm::cycle_string)
      .def("__mul__", [](const Perm& a, const Perm& b) { return a * b; })
      .def("__eq__", [](const Perm& a, const Perm& b) { return a == b; })
      .def("__hash__", [](const Perm& p) { return PermHash{}(p); })
      .def("__repr__",
           [](const Perm& p) { return "Perm" + p.cycle_string(); });

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init<std::size_t, std::vector<Perm>>(), py::arg("degree"),
           py::arg("generators"))
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("generators", &PermGroup::generators)
      .def("order", &PermGroup::order)
      .def("contains", &PermGroup::contains, py::arg("p"))
      .def("elements", &PermGroup::elements,
           py::arg("cap") = kDefaultElementCap)
      .def("orbit", &PermGroup::orbit, py::arg("point"))
      .def("__len__", [](const PermGroup& g) { return g.order(); });

  // builders
  m.def("cyclic", &cyclic, py::arg("n"));
  m.def("dihedral", &dihedral, py::arg("n"));
  m.def("symmetric", &symmetric, py::arg("n"));
  m.def("alternating", &alternating, py::arg("n"));
  m.def("elementary_abelian", &elementary_abelian, py::arg("p"), py::arg("k"),
        py::arg("degree_cap") = kDefaultDegreeCap);
  m.def("direct_product", &direct_product, py::arg("a"), py::arg("b"));
  m.def("psl2", &psl2, py::arg("q"));
  m.def(
      "semidirect_affine",
      [](unsigned p, unsigned a, unsigned b, unsigned c, unsigned d,
         std::size_t degree_cap) {
        return semidirect_affine(p, Matrix2p{p, a, b, c, d}, degree_cap);
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
      py::arg("degree_cap") = kDefaultDegreeCap);
  m.def(
      "affine_irreducible",
      [](unsigned p, unsigned m_ord, std::size_t degree_cap) {
        return semidirect_affine(p, find_irreducible_element(p, m_ord),
                                 degree_cap);
      },
      py::arg("p"), py::arg("m"), py::arg("degree_cap") = kDefaultDegreeCap);
  m.def("paper_example", &paper_example);
  m.def("parse_group_file", &parse_group_file, py::arg("text"),
        py::arg("degree_cap") = kDefaultDegreeCap);
  m.def("serialize_group", &serialize_group, py::arg("group"));

  // lattice summary as a dict
  m.def(
      "lattice_summary",
      [](const PermGroup& g, std::uint64_t element_cap) {
        Lattice l = enumerate_subgroups(g, element_cap);
        return json_to_py(lattice_json(l, "group"));
      },
      py::arg("group"), py::arg("element_cap") = kDefaultElementCap);

  // theorem verdicts as dicts
  m.def(
      "verify_theorem",
      [](const PermGroup& g, const std::string& name,
         std::uint64_t element_cap, std::size_t degree_cap) {
        TheoremReport rep =
            h2m::verify_theorem(g, name, make_caps(element_cap, degree_cap));
        return json_to_py(report_json(rep));
      },
      py::arg("group"), py::arg("name") = "group",
      py::arg("element_cap") = kDefaultElementCap,
      py::arg("degree_cap") = kDefaultDegreeCap);
  m.def(
      "check_hypothesis",
      [](const PermGroup& g, std::uint64_t element_cap) {
        Lattice l = enumerate_subgroups(g, element_cap);
        HypothesisResult res = h2m::check_hypothesis(l);
        py::dict d;
        d["holds"] = res.holds;
        if (res.witness) {
          py::dict w;
          w["h_order"] = res.witness->h_order;
          w["m_order"] = res.witness->m_order;
          w["index"] = res.witness->index;
          w["gcd"] = res.witness->gcd;
          d["witness"] = w;
        }
        return d;
      },
      py::arg("group"), py::arg("element_cap") = kDefaultElementCap);
  m.def(
      "scan_default_corpus",
      [](bool include_large, std::uint64_t element_cap, std::size_t degree_cap,
         unsigned jobs) {
        auto reports = scan_corpus(default_corpus(include_large),
                                   make_caps(element_cap, degree_cap), jobs);
        return json_to_py(scan_json(reports));
      },
      py::arg("include_large") = false,
      py::arg("element_cap") = kDefaultElementCap,
      py::arg("degree_cap") = kDefaultDegreeCap, py::arg("jobs") = 1);
  m.def("verify_psl_witnesses", [](std::uint64_t element_cap,
                                   std::size_t degree_cap) {
    return json_to_py(
        psl_witnesses_json(h2m::verify_psl_witnesses(make_caps(element_cap,
                                                               degree_cap))));
  }, py::arg("element_cap") = kDefaultElementCap,
     py::arg("degree_cap") = kDefaultDegreeCap);
}
