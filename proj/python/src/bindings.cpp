#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opalg/errors.hpp"
#include "opalg/presets.hpp"
#include "opalg/report.hpp"

namespace py = pybind11;

namespace {

// Documents cross the boundary as JSON text; the Python wrapper converts to dicts.

opalg::PresentationFile load(const std::string& doc) { return opalg::parse_presentation(doc); }

std::string preset_document(const std::string& name, const std::string& field) {
  opalg::Preset p = opalg::build_preset(name, opalg::field_from_name(field));
  return opalg::presentation_to_json(opalg::PresentationFile{std::move(p.algebra), std::move(p.action)}).dump();
}

std::string analyze(const std::string& doc, unsigned threads, std::uint64_t seed) {
  return opalg::analyze_report(load(doc), {threads, seed}).dump();
}

std::string check_ideal(const std::string& doc, const std::string& basis) {
  const opalg::PresentationFile p = load(doc);
  const opalg::Subspace ideal = opalg::parse_subspace(basis, p.algebra.field(), p.algebra.dim());
  return opalg::check_ideal_report(p, ideal).dump();
}

}  // namespace

PYBIND11_MODULE(_opalg, m) {
  m.doc() = "Structure theory of finite-dimensional algebras over linear operads";

  py::register_exception<opalg::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<opalg::FieldGuardError>(m, "FieldGuardError", PyExc_ArithmeticError);
  py::register_exception<opalg::TheoremViolation>(m, "TheoremViolation", PyExc_RuntimeError);

  m.def("preset_names", &opalg::preset_names);
  m.def("preset", &preset_document, py::arg("name"), py::arg("field") = "Q");
  m.def("analyze", &analyze, py::arg("doc"), py::arg("threads") = 1u, py::arg("seed") = 0u);
  m.def("radical", [](const std::string& doc) { return opalg::radical_report(load(doc)).dump(); }, py::arg("doc"));
  m.def("decompose", [](const std::string& doc) { return opalg::decompose_report(load(doc)).dump(); }, py::arg("doc"));
  m.def("classify", [](const std::string& doc) { return opalg::classify_report(load(doc)).dump(); }, py::arg("doc"));
  m.def("check_ideal", &check_ideal, py::arg("doc"), py::arg("basis"));
  m.def("canonical", [](const std::string& doc) { return opalg::dump_canonical(opalg::presentation_to_json(load(doc))); },
        py::arg("doc"));
}
