#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhpp/errors.hpp"
#include "qhpp/oracle.hpp"
#include "qhpp/report.hpp"

namespace py = pybind11;
using namespace qhpp;

namespace {

std::pair<std::string, std::string> components(const std::string& text) {
  PolySystem s = parse_system(text);
  return {s.p.to_string(), s.q.to_string()};
}

// Returns (status, report JSON).
std::pair<int, std::string> analyze_text(const std::string& text, bool oracle, double tol, double radius) {
  AnalyzeOptions opt;
  opt.oracle = oracle;
  opt.tol = tol;
  opt.radius = radius;
  AnalysisReport r = analyze(parse_system(text), opt);
  return {r.status, r.dump()};
}

std::string streamlines_csv(const std::string& text, const std::string& window, int n, double tol, double tmax) {
  return to_csv(streamlines(parse_system(text), parse_window(window), n, tol, tmax));
}

}  // namespace

PYBIND11_MODULE(_qhpp, m) {
  m.doc() = "Planar quasi-homogeneous polynomial systems";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BadWindowError>(m, "BadWindowError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def("parse", &components, py::arg("text"), "Canonical (P, Q) strings of a system file.");
  m.def("analyze", &analyze_text, py::arg("text"), py::arg("oracle") = true, py::arg("tol") = 1e-10,
        py::arg("radius") = 0.05, "Run the full pipeline; returns (status, JSON report).");
  m.def("catalog", [](int degree) { return catalog_json(degree).dump(2) + "\n"; }, py::arg("degree") = 5);
  m.def("census", [](bool greater, bool less, bool equal) { return census_json(greater, less, equal).dump(2) + "\n"; },
        py::arg("greater") = true, py::arg("less") = true, py::arg("equal") = true);
  m.def("streamlines_csv", &streamlines_csv, py::arg("text"), py::arg("window") = "-1:1,-1:1", py::arg("n") = 100,
        py::arg("tol") = 1e-8, py::arg("tmax") = 20.0);
}
