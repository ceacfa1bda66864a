#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opstruct/emit.hpp"
#include "opstruct/error.hpp"
#include "opstruct/functional.hpp"
#include "opstruct/instance_io.hpp"
#include "opstruct/mops.hpp"
#include "opstruct/pipeline.hpp"

namespace py = pybind11;
using namespace opstruct;

namespace {

std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<Rational> rationals(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

py::dict family(const std::string& name, int K, const std::string& alpha, const std::string& beta) {
  FamilySpec spec;
  spec.kind = parse_family_kind(name);
  spec.alpha = parse_rational(alpha);
  spec.beta = parse_rational(beta);
  const FamilyData data = classical_family(spec, K);
  std::vector<std::vector<std::string>> polys;
  for (const auto& p : generate(data.recurrence, data.recurrence.size())) polys.push_back(strings(p.coeffs()));
  py::dict d;
  d["family"] = spec.name();
  d["moments"] = strings(data.functional.moments());
  d["beta"] = strings(data.recurrence.betas());
  d["gamma"] = strings(data.recurrence.gammas());
  d["polys"] = polys;
  return d;
}

std::vector<std::string> hankel_dets(const std::vector<std::string>& moments, int n) {
  return strings(hankel_regular(MomentFunctional(rationals(moments)), n).hankel_dets);
}

py::tuple recurrence(const std::vector<std::string>& moments, int n_max) {
  const RecurrenceCoeffs rc = recurrence_from_moments(MomentFunctional(rationals(moments)), n_max);
  return py::make_tuple(strings(rc.betas()), strings(rc.gammas()));
}

std::string run(const std::string& document, std::optional<std::vector<std::string>> checks, std::optional<int> n_max,
                std::optional<int> horizon) {
  const InstanceSpec spec = parse_instance(document);
  PipelineConfig cfg = spec.config;
  if (checks) cfg.checks = *checks;
  if (n_max) cfg.n_max = *n_max;
  if (horizon) cfg.horizon = *horizon;
  py::gil_scoped_release release;
  const RelationInstance inst = build_instance(spec, cfg);
  return emit_json(run_pipeline(inst, cfg));
}

}  // namespace

PYBIND11_MODULE(_opstruct, m) {
  m.doc() = "Exact rational checks for linearly related orthogonal polynomial sequences";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&] { return py::exception<Error>(m, "Error", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type.get_stored()(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.get_stored().ptr(), exc.ptr());
    }
  });

  m.def("canonical", [](const std::string& s) { return to_string(parse_rational(s)); }, py::arg("text"),
        "Canonical p/q form of a rational string.");
  m.def("family", &family, py::arg("name"), py::arg("K") = 24, py::arg("alpha") = "0", py::arg("beta") = "0",
        "Moments, recurrence and polynomials of a classical family.");
  m.def("hankel_dets", &hankel_dets, py::arg("moments"), py::arg("n"));
  m.def("recurrence", &recurrence, py::arg("moments"), py::arg("n_max"));
  m.def("run", &run, py::arg("document"), py::arg("checks") = py::none(), py::arg("n_max") = py::none(),
        py::arg("horizon") = py::none(), "Run the pipeline on an instance JSON document; returns the JSON report.");
  m.def("all_checks", &all_checks);
}
