#include <pybind11/pybind11.h>

#include "wtrees/counting.hpp"
#include "wtrees/enumerate.hpp"
#include "wtrees/errors.hpp"
#include "wtrees/io.hpp"
#include "wtrees/verify.hpp"

namespace py = pybind11;
using namespace wtrees;

namespace {

// Counts overflow machine ints fast, and tree documents nest; everything
// crosses the boundary as decimal strings / JSON text and the Python wrapper
// (wtrees/__init__.py) turns them back into ints and dicts.

EnumerateOptions mkopts(std::uint64_t budget, unsigned jobs) {
  EnumerateOptions o;
  o.budget = budget;
  o.jobs = jobs;
  return o;
}

Json class_doc(const EnumeratedClass& cls) {
  Json j;
  j["code"] = cls.code.hex();
  j["automorphismOrder"] = cls.automorphism_order;
  Json doc = tree_to_json(cls.tree);  // keep alive while iterating
  for (auto& [k, v] : doc.items()) j[k] = std::move(v);
  return j;
}

constexpr std::uint64_t kDefaultBudget = EnumerateOptions{}.budget;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact counting and enumeration of plane weighted trees (C++ core)";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.code()) {
        case Errc::non_integer_result:
        case Errc::resource_budget:
        case Errc::no_convergence:
        case Errc::residual_mismatch:
          PyErr_SetString(PyExc_RuntimeError, e.what());
          break;
        default:  // the input-validation family
          PyErr_SetString(PyExc_ValueError, e.what());
      }
    }
  });

  m.def(
      "count_str",
      [](const std::string& lit, std::uint64_t budget, unsigned jobs) {
        return cardinality(parse_type_literal(lit), mkopts(budget, jobs)).str();
      },
      py::arg("type"), py::arg("budget") = kDefaultBudget, py::arg("jobs") = 0,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "enumerate_json",
      [](const std::string& lit, std::uint64_t budget, unsigned jobs) {
        auto classes = enumerate_classes(parse_type_literal(lit), mkopts(budget, jobs));
        Json arr = Json::array();
        for (const auto& cls : classes) arr.push_back(class_doc(cls));
        return arr.dump();
      },
      py::arg("type"), py::arg("budget") = kDefaultBudget, py::arg("jobs") = 0,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "census_json",
      [](const std::string& lit, std::uint64_t budget, unsigned jobs) {
        return census_to_json(symmetric_census(parse_type_literal(lit),
                                               mkopts(budget, jobs)))
            .dump();
      },
      py::arg("type"), py::arg("budget") = kDefaultBudget, py::arg("jobs") = 0,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "qpoly_text", [](unsigned i) { return newton_q(i).text(); }, py::arg("i"));

  m.def(
      "system_text",
      [](const std::string& lit) { return build_system(parse_type_literal(lit)).text(); },
      py::arg("type"));

  m.def(
      "system_json",
      [](const std::string& lit) {
        return system_to_json(build_system(parse_type_literal(lit))).dump();
      },
      py::arg("type"));

  m.def(
      "solve_json",
      [](const std::string& lit, unsigned starts, double tol, std::uint64_t seed) {
        AVSystem sys = build_system(parse_type_literal(lit));
        SolveConfig cfg;
        cfg.starts = starts;
        cfg.tol = tol;
        cfg.seed = seed;
        return solutions_to_json(solve_multistart(sys, cfg)).dump();
      },
      py::arg("type"), py::arg("starts") = 500, py::arg("tol") = 1e-10,
      py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>());

  m.def(
      "sweep_json",
      [](unsigned max_weight, std::uint64_t budget, unsigned jobs) {
        return sweep_report_to_json(run_sweep(max_weight, mkopts(budget, jobs))).dump();
      },
      py::arg("max_weight"), py::arg("budget") = kDefaultBudget, py::arg("jobs") = 0,
      py::call_guard<py::gil_scoped_release>());
}
