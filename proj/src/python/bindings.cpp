#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "vcfam/constructions.hpp"
#include "vcfam/covering.hpp"
#include "vcfam/errors.hpp"
#include "vcfam/explore.hpp"
#include "vcfam/family_io.hpp"
#include "vcfam/oracle.hpp"
#include "vcfam/set_family.hpp"
#include "vcfam/vc.hpp"
#include "vcfam/verifier.hpp"

namespace py = pybind11;
using namespace vcfam;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::vector<int>> member_lists(const SetFamily& f) {
  std::vector<std::vector<int>> out;
  out.reserve(f.size());
  for (const auto& m : f.members()) out.push_back(m.elements());
  return out;
}

SubsetMask probe_of(const SetFamily& f, const std::vector<int>& elements) {
  return SubsetMask::from_elements(f.ground_size(), elements);
}

OracleOptions oracle_options(std::uint64_t cap, int workers) {
  OracleOptions o;
  o.cap = cap;
  o.workers = workers;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "VC-dimension of k-covering set families";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<FeasibilityError>(m, "FeasibilityError", PyExc_RuntimeError);

  py::class_<SetFamily>(m, "SetFamily")
      .def_property_readonly("n", &SetFamily::ground_size)
      .def_property_readonly("members", &member_lists)
      .def_property_readonly("uniform_size", &SetFamily::uniform_size)
      .def("__len__", &SetFamily::size)
      .def("__eq__", [](const SetFamily& a, const SetFamily& b) { return a == b; })
      .def("__repr__", [](const SetFamily& f) {
        return "<SetFamily n=" + std::to_string(f.ground_size()) + " size=" + std::to_string(f.size()) + ">";
      });

  m.def("make_family", &make_family, py::arg("n"), py::arg("members"));
  m.def("read_family", [](const std::string& text) { return read_family(text); }, py::arg("text"));
  m.def("write_family", &write_family, py::arg("family"));

  m.def(
      "vc_dimension",
      [](const SetFamily& f, int workers) {
        py::gil_scoped_release release;
        return vc_dimension(f, workers).dimension;
      },
      py::arg("family"), py::arg("workers") = 1);
  m.def("vc_report", [](const SetFamily& f) { return to_py(to_json(vc_dimension(f))); }, py::arg("family"));
  m.def(
      "shatters", [](const SetFamily& f, const std::vector<int>& a) { return shatters(f, probe_of(f, a)); },
      py::arg("family"), py::arg("elements"));
  m.def(
      "is_k_covering", [](const SetFamily& f, int k) { return is_k_covering(f, k).holds; }, py::arg("family"),
      py::arg("k"));
  m.def("unique_face", [](const SetFamily& f) { return to_py(to_json(unique_face(f))); }, py::arg("family"));

  m.def("full_family", &full_family, py::arg("n"), py::arg("s"));
  m.def("initial_segment_family", &initial_segment_family, py::arg("n"));
  m.def("cone", &cone, py::arg("family"));
  m.def("product", &product, py::arg("family"), py::arg("l"));
  m.def("hypercube_family", &hypercube_family, py::arg("k"), py::arg("m"));
  m.def("build_Fk", &build_Fk, py::arg("m"), py::arg("k"));
  m.def("covering_witness_family", &covering_witness_family, py::arg("k"), py::arg("s"), py::arg("n"));

  m.def(
      "oracle_D",
      [](int k, int s, int n, std::uint64_t cap, int workers, bool enumerate) {
        const auto p = Parameters::make(k, s, n);
        const auto opts = oracle_options(cap, workers);
        OracleResult r;
        {
          py::gil_scoped_release release;
          r = enumerate ? oracle_D_enumerate(p, opts) : oracle_D(p, opts);
        }
        py::dict d = to_py(to_json(r));
        d["witness_family"] = r.witness;
        return d;
      },
      py::arg("k"), py::arg("s"), py::arg("n"), py::arg("cap") = kDefaultOracleCap, py::arg("workers") = 1,
      py::arg("enumerate") = false);

  m.def(
      "lower_bound_certificate", [](int k, int s, int n) { return to_py(to_json(lower_bound_certificate(k, s, n))); },
      py::arg("k"), py::arg("s"), py::arg("n"));
  m.def(
      "upper_bound_certificate",
      [](int k, int s, int n, int workers) { return to_py(to_json(upper_bound_certificate(k, s, n, workers))); },
      py::arg("k"), py::arg("s"), py::arg("n"), py::arg("workers") = 1);
  m.def("main_theorem_threshold", &main_theorem_threshold, py::arg("k"), py::arg("s"));
  m.def(
      "verify_main_theorem",
      [](int k, int s, int workers) {
        MainTheoremReport r;
        {
          py::gil_scoped_release release;
          r = verify_main_theorem(k, s, workers);
        }
        return to_py(to_json(r));
      },
      py::arg("k"), py::arg("s"), py::arg("workers") = 1);
  m.def(
      "verify_prop_const", [](int mm, int k) { return to_py(to_json(verify_prop_const(mm, k))); }, py::arg("m"),
      py::arg("k"));

  m.def(
      "explore",
      [](int k, int s, int n_lo, int n_hi, std::uint64_t cap, int workers) {
        ExploreOptions opts;
        opts.oracle.cap = cap;
        opts.workers = workers;
        std::vector<ExplorationRow> rows;
        {
          py::gil_scoped_release release;
          rows = explore(k, s, n_lo, n_hi, opts);
        }
        py::list out;
        for (const auto& r : rows) out.append(to_py(to_json(r)));
        return out;
      },
      py::arg("k"), py::arg("s"), py::arg("n_lo"), py::arg("n_hi"), py::arg("cap") = kDefaultOracleCap,
      py::arg("workers") = 1);
}
