#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schurq/report.hpp"

namespace py = pybind11;
using namespace schurq;

namespace {

ModulePtr object(const std::string& kind, const std::vector<int>& parts, int n, const Ring& r) {
  Partition lam = parts;
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  if (kind == "gamma") return eval_divided(pad(parts, n), n, r);
  if (kind == "sym") return eval_symmetric(pad(parts, n), n, r);
  if (kind == "ext") return eval_exterior(pad(parts, n), n, r);
  if (kind == "delta") return standard_object(lam, n, r).quotient;
  if (kind == "nabla") return costandard_object(lam, n, r).module;
  if (kind == "weyl") return weyl(lam, n, r).module;
  if (kind == "schur") return schur_module(lam, n, r);
  if (kind == "simple") return simple_head(lam, n, r).module;
  throw std::invalid_argument("unknown object kind '" + kind + "'");
}

Presented presented(const std::string& kind, const std::vector<int>& parts, int n, const Ring& r) {
  if (kind == "delta") return present_standard(to_partition(parts), n, r);
  if (kind == "gamma") return present_projective(pad(parts, n), n, r);
  return present(object(kind, parts, n, r));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<CombinatError>(m, "CombinatError", PyExc_ValueError);
  py::register_exception<RingError>(m, "RingError", PyExc_ValueError);

  m.def("partitions", [](int d) { return partitions(d); }, py::arg("d"));
  m.def("kostka", [](const Partition& lam, const Composition& mu) { return kostka(lam, mu); }, py::arg("lam"), py::arg("mu"));
  m.def("hook_content", &hook_content, py::arg("lam"), py::arg("n"));
  m.def(
      "schur_dim", [](int n, int d, const std::string& ring) { return SchurAlgebra(n, d, Ring::parse(ring)).dim(); },
      py::arg("n"), py::arg("d"), py::arg("ring") = "Q");
  m.def(
      "module_json",
      [](const std::string& kind, const std::vector<int>& parts, int n, const std::string& ring) {
        return module_json(*object(kind, parts, n, Ring::parse(ring))).dump();
      },
      py::arg("kind"), py::arg("parts"), py::arg("n"), py::arg("ring") = "Q");
  m.def(
      "hom_dim",
      [](const std::string& sk, const std::vector<int>& sp, const std::string& tk, const std::vector<int>& tp, int n,
         const std::string& ring) {
        Ring r = Ring::parse(ring);
        return hom_space(object(sk, sp, n, r), object(tk, tp, n, r)).size();
      },
      py::arg("source"), py::arg("source_parts"), py::arg("target"), py::arg("target_parts"), py::arg("n"),
      py::arg("ring") = "Q");
  m.def(
      "ext1_json",
      [](const std::string& sk, const std::vector<int>& sp, const std::string& tk, const std::vector<int>& tp, int n,
         const std::string& ring) {
        Ring r = Ring::parse(ring);
        return presentation_json(ext1(presented(sk, sp, n, r), object(tk, tp, n, r)).value, r).dump();
      },
      py::arg("source"), py::arg("source_parts"), py::arg("target"), py::arg("target_parts"), py::arg("n"),
      py::arg("ring") = "Q");
  m.def(
      "cauchy_json",
      [](const Composition& mu, int n, const std::string& ring) {
        return filtration_json(cauchy_filtration_projective(pad(mu, n), n, Ring::parse(ring))).dump();
      },
      py::arg("mu"), py::arg("n"), py::arg("ring") = "Q");
  m.def(
      "verify_hwc_json",
      [](int n, int d, const std::string& ring) { return certificate_json(verify_hwc(n, d, Ring::parse(ring))).dump(); },
      py::arg("n"), py::arg("d"), py::arg("ring") = "Q");
  m.def(
      "tilting_json",
      [](int n, int d, const std::string& ring) { return tilting_json(tilting_object(n, d, Ring::parse(ring))).dump(); },
      py::arg("n"), py::arg("d"), py::arg("ring") = "Q");
  m.def(
      "ringel_json",
      [](int n, int d, const std::string& ring) {
        return ringel_json(ringel_self_duality_check(n, d, Ring::parse(ring))).dump();
      },
      py::arg("n"), py::arg("d"), py::arg("ring") = "Q");
}
