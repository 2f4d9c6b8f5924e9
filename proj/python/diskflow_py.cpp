#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diskflow/codec.hpp"
#include "diskflow/enumeration.hpp"
#include "diskflow/graph_json.hpp"
#include "diskflow/oracle.hpp"
#include "diskflow/render.hpp"

namespace py = pybind11;
using namespace diskflow;

namespace {

py::dict validation_dict(const Code& c) {
  const auto r = check_realizable(c);
  py::list props;
  for (const auto& p : r.thm3.property) {
    py::dict d;
    d["status"] = p.status == PropertyStatus::pass ? "pass" : p.status == PropertyStatus::fail ? "fail" : "skipped";
    d["token"] = p.token ? py::cast(*p.token) : py::none();
    d["detail"] = p.detail;
    props.append(d);
  }
  py::dict out;
  out["code"] = serialize_code(c);
  out["thm3"] = props;
  out["thm3_passed"] = r.thm3.passed();
  out["realizable"] = r.realizable;
  out["offending_vertex"] = r.offending_vertex ? py::cast(*r.offending_vertex) : py::none();
  out["offending_boundary"] = r.offending_boundary ? py::cast(r.offending_boundary->directions) : py::none();
  out["detail"] = r.detail;
  return out;
}

}  // namespace

PYBIND11_MODULE(_diskflow, m) {
  m.doc() = "Exact classification of flows on the disk with one boundary singular point";

  py::register_exception<CodeError>(m, "CodeError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);

  m.def("canonicalize", [](const std::string& text) { return serialize_code(parse_code(text)); },
        py::arg("code"), "Parse a code and return its canonical text form.");
  m.def("validate", [](const std::string& text) { return validation_dict(parse_code(text)); }, py::arg("code"));
  m.def("is_realizable", [](const std::string& text) { return is_realizable(parse_code(text)); }, py::arg("code"));
  m.def("are_equivalent",
        [](const std::string& a, const std::string& b) { return are_equivalent(parse_code(a), parse_code(b)); },
        py::arg("a"), py::arg("b"));

  m.def("cell_config_count", &cell_config_count, py::arg("n"));
  m.def("count_flows", &count_flows, py::arg("n"));
  m.def(
      "enumerate_flows",
      [](std::size_t n, unsigned workers) {
        std::vector<Code> codes;
        {
          py::gil_scoped_release release;
          codes = enumerate_flows(n, workers);
        }
        std::vector<std::string> out;
        out.reserve(codes.size());
        for (const auto& c : codes) out.push_back(serialize_code(c));
        return out;
      },
      py::arg("n"), py::arg("workers") = 0);
  m.def("plane_trees", [](std::size_t n) {
    std::vector<std::string> out;
    for (const auto& t : plane_trees(n)) out.push_back(serialize_code(degree_code(t.up_degrees())));
    return out;
  }, py::arg("n"));
  m.def("table_rows", [](std::size_t max_n) {
    py::list out;
    for (const auto& r : table_rows(max_n)) {
      out.append(py::make_tuple(r.n, r.abstract_tree, r.flows_per_embedding, r.embeddings, r.total));
    }
    return out;
  }, py::arg("max_n"));

  m.def("decode_json", [](const std::string& text) { return graph_to_json(code_to_graph(parse_code(text))).dump(); },
        py::arg("code"));
  m.def("encode_json",
        [](const std::string& doc) { return serialize_code(graph_to_code(graph_from_json(nlohmann::json::parse(doc)))); },
        py::arg("document"));
  m.def("render_tree", [](const std::string& text) { return tree_to_dot(code_to_graph(parse_code(text))); },
        py::arg("code"));
  m.def("render_diagram", [](const std::string& text) { return diagram_to_svg(code_to_graph(parse_code(text))); },
        py::arg("code"));
  m.def("oracle_json", [](std::size_t n, bool extended) {
    const auto r = oracle_enumerate(n, extended ? kOracleExtendedBound : kOracleDefaultBound);
    return report_to_json(r.report).dump();
  }, py::arg("n"), py::arg("extended") = false);
}
