#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "l6n1/fixtures.hpp"
#include "l6n1/generator.hpp"
#include "l6n1/io.hpp"
#include "l6n1/link_invariants.hpp"
#include "l6n1/resolver.hpp"

namespace py = pybind11;
using namespace l6n1;

namespace {

py::dict check_text(const std::string& text) {
  Projection p = parse_projection(text);
  auto tc = p.type_counts();
  py::dict d;
  d["vertices"] = p.map().vertex_count();
  d["edges"] = p.map().edge_count();
  d["faces"] = p.map().face_count();
  d["components"] = p.map().component_count();
  d["pairwise_crossing"] = p.is_pairwise_crossing();
  d["type_counts"] = py::make_tuple(tc.br, tc.bg, tc.rg, tc.mono);
  return d;
}

py::dict reduce_text(const std::string& text) {
  Projection p = parse_projection(text);
  auto res = reduce(p);
  auto cls = classify_irreducible(res.reduced);
  py::dict d;
  d["reduced"] = serialize_projection(res.reduced);
  d["trace"] = serialize_trace(res.trace);
  d["steps"] = (int)res.trace.steps.size();
  d["irreducible_class"] = std::string(irreducible_class_name(cls.cls));
  return d;
}

std::string resolve_text(const std::string& text) {
  return serialize_diagram(resolve_l6n1(parse_projection(text)));
}

py::dict verify_text(const std::string& text, int max_crossings) {
  Diagram d = parse_diagram(text);
  auto v = is_l6n1(d, max_crossings);
  py::dict out;
  out["is_l6n1"] = v.ok;
  out["components"] = v.components;
  out["abs_linking_profile"] = v.abs_lk;
  out["profile_ok"] = v.profile_ok;
  out["jones_ok"] = v.jones_ok;
  out["jones"] = v.profile_ok ? v.jones_value.str() : std::string();
  out["reason"] = v.reason;
  return out;
}

py::dict invariants_text(const std::string& text) {
  Diagram d = parse_diagram(text);
  py::dict out;
  out["bracket"] = kauffman_bracket(d).str();
  out["jones"] = jones(d).str();
  out["writhe"] = writhe(d);
  py::list lk;
  int nc = (int)d.projection.map().straight_walks().size();
  for (int i = 0; i < nc; i++)
    for (int j = i + 1; j < nc; j++)
      lk.append(py::make_tuple(i, j, linking_number(d, i, j)));
  out["linking"] = lk;
  return out;
}

std::vector<std::string> enumerate_text(int vertices, bool pairwise_crossing, bool connected) {
  EnumerationFilter f;
  f.vertices = vertices;
  f.pairwise_crossing_only = pairwise_crossing;
  f.connected_only = connected;
  std::vector<std::string> out;
  enumerate_projections(f, [&](const Projection& p) { out.push_back(serialize_projection(p)); });
  return out;
}

std::string random_text(int vertices, std::uint64_t seed) {
  return serialize_projection(random_projection(vertices, seed));
}

}  // namespace

PYBIND11_MODULE(_l6n1, m) {
  m.doc() = "reduce, resolve and verify 3-component link shadows against L6n1";

  py::register_exception<Error>(m, "L6n1Error");

  m.def("check", &check_text, py::arg("text"),
        "Validate a projection record and report its structure.");
  m.def("reduce", &reduce_text, py::arg("text"),
        "Reduce to an irreducible projection; returns text, trace and class.");
  m.def("resolve", &resolve_text, py::arg("text"),
        "Resolve a pairwise crossing projection into an L6n1 diagram record.");
  m.def("verify", &verify_text, py::arg("text"), py::arg("max_crossings") = -1,
        "Run the linking/Jones verdict on a diagram record.");
  m.def("invariants", &invariants_text, py::arg("text"),
        "Bracket, Jones, writhe and pairwise linking numbers of a diagram.");
  m.def("enumerate", &enumerate_text, py::arg("vertices"), py::arg("pairwise_crossing") = false,
        py::arg("connected") = false,
        "All projection classes with the given crossing count.");
  m.def("random_projection", &random_text, py::arg("vertices"), py::arg("seed"),
        "Seeded pairwise crossing projection with exactly `vertices` crossings.");
  m.def("p1", [] { return serialize_projection(fixtures::p1()); },
        "The triangle-position irreducible projection.");
  m.def("p2", [] { return serialize_projection(fixtures::p2()); },
        "The chain-position irreducible projection.");
  m.def("reference_diagram", [] { return serialize_diagram(fixtures::l6n1_reference_diagram()); },
        "Reference 6-crossing diagram of L6n1.");
}
