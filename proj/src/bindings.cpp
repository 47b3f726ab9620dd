// Python bindings for the core operations: field arithmetic, code
// construction and relatives, exact weight distributions, the closed-form
// tables, the counting quantities, and design verification. Exact big
// counts cross the boundary as Python ints (via decimal strings).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trizero/construct.hpp"
#include "trizero/counts.hpp"
#include "trizero/designs.hpp"
#include "trizero/gf2m.hpp"
#include "trizero/lincode.hpp"

namespace py = pybind11;
using namespace trizero;

namespace {

py::int_ to_py(const BigInt& v) {
  std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::dict wd_to_dict(const WeightDistribution& wd) {
  py::dict d;
  for (const auto& [w, c] : wd.counts) d[py::int_(w)] = to_py(c);
  return d;
}

}  // namespace

PYBIND11_MODULE(_trizero, mod) {
  mod.doc() =
      "binary three-zero cyclic codes: construction, exact weight "
      "distributions, counting formulas, and design verification";

  py::class_<Field>(mod, "Field")
      .def(py::init([](unsigned m) { return Field::with_default_modulus(m); }),
           py::arg("m"))
      .def(py::init<unsigned, uint64_t, uint32_t>(), py::arg("m"),
           py::arg("modulus"), py::arg("generator"))
      .def_property_readonly("m", &Field::degree)
      .def_property_readonly("size", &Field::size)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("modulus", &Field::modulus)
      .def_property_readonly("generator", &Field::generator)
      .def("add", &Field::add)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("pow", &Field::pow)
      .def("trace", &Field::trace)
      .def("cube_root", &Field::cube_root)
      .def("gen_pow", &Field::gen_pow)
      .def("log", &Field::log)
      .def("parse_element", &Field::parse_element)
      .def("format_element", &Field::format_element);

  py::class_<BinaryCode>(mod, "BinaryCode")
      .def_readonly("n", &BinaryCode::n)
      .def_readonly("labels", &BinaryCode::labels)
      .def_property_readonly("k", &BinaryCode::dim);

  mod.def("build_ce", &build_ce, py::arg("field"), py::arg("e"));
  mod.def("build_extended_augmented", &build_extended_augmented,
          py::arg("field"), py::arg("e"));
  mod.def("dual", &dual, py::arg("code"));
  mod.def("extend", &extend, py::arg("code"));
  mod.def(
      "augment",
      [](const BinaryCode& c) { return augment(c).code; }, py::arg("code"));
  mod.def("shorten", &shorten, py::arg("code"), py::arg("positions"));
  mod.def("puncture", &puncture, py::arg("code"), py::arg("positions"));

  mod.def(
      "weight_distribution",
      [](const BinaryCode& c, int guard) {
        return wd_to_dict(enumerate_weight_distribution(c, guard));
      },
      py::arg("code"), py::arg("guard") = kDefaultEnumGuard);
  mod.def(
      "predicted_wd_base",
      [](unsigned m, unsigned e) { return wd_to_dict(predicted_wd_base(m, e)); },
      py::arg("m"), py::arg("e"));
  mod.def(
      "predicted_wd_extended",
      [](unsigned m, unsigned e) {
        return wd_to_dict(predicted_wd_extended(m, e));
      },
      py::arg("m"), py::arg("e"));
  mod.def(
      "predicted_wd_shortened",
      [](unsigned m, int t, long long N, long long nbar, bool tr_one) {
        return wd_to_dict(predicted_wd_shortened(m, t, N, nbar, tr_one));
      },
      py::arg("m"), py::arg("t"), py::arg("N") = -1, py::arg("nbar") = -1,
      py::arg("tr_one") = false);
  mod.def(
      "predicted_dual_low_weights",
      [](unsigned m, unsigned d) {
        py::dict out;
        for (const auto& [w, c] : predicted_dual_low_weights(m, d))
          out[py::int_(w)] = to_py(c);
        return out;
      },
      py::arg("m"), py::arg("d"));
  mod.def(
      "dual_low_weight_report",
      [](unsigned m, unsigned d) {
        DualLowWeights r = dual_low_weight_report(m, d);
        py::dict values, closed;
        for (const auto& [w, c] : r.values) values[py::int_(w)] = to_py(c);
        for (const auto& [w, s] : r.closed_form) closed[py::int_(w)] = s;
        py::dict out;
        out["values"] = values;
        out["closed_form"] = closed;
        out["discrepancies"] = r.discrepancies;
        return out;
      },
      py::arg("m"), py::arg("d"));

  mod.def("kloosterman", &kloosterman, py::arg("field"), py::arg("a"));
  mod.def("cubic_sum_c", &cubic_sum_c, py::arg("field"), py::arg("a"),
          py::arg("b"));
  mod.def("cubic_sum_g", &cubic_sum_g, py::arg("field"), py::arg("a"),
          py::arg("b"));
  mod.def(
      "n_of_triple",
      [](const Field& f, uint32_t x1, uint32_t x2, uint32_t x3, bool brute) {
        return n_of_triple(f, TripleSpec(f, x1, x2, x3), brute).value;
      },
      py::arg("field"), py::arg("x1"), py::arg("x2"), py::arg("x3"),
      py::arg("brute_force") = false);
  mod.def(
      "nbar_of_quad",
      [](const Field& f, uint32_t x1, uint32_t x2, uint32_t x3, uint32_t x4,
         bool brute) {
        return nbar_of_quad(f, QuadSpec(f, x1, x2, x3, x4), brute).value;
      },
      py::arg("field"), py::arg("x1"), py::arg("x2"), py::arg("x3"),
      py::arg("x4"), py::arg("brute_force") = false);
  mod.def(
      "combined_n_t4",
      [](const Field& f, uint32_t x1, uint32_t x2, uint32_t x3, uint32_t x4,
         bool brute) {
        return combined_n_t4(f, QuadSpec(f, x1, x2, x3, x4), brute);
      },
      py::arg("field"), py::arg("x1"), py::arg("x2"), py::arg("x3"),
      py::arg("x4"), py::arg("brute_force") = false);

  mod.def(
      "verify_design",
      [](const BinaryCode& code, int w, int t, int guard) {
        DesignCheck dc = verify_t_design(blocks_from_code(code, w, guard), t);
        py::dict out;
        out["is_design"] = dc.is_design;
        if (dc.is_design) {
          out["lambda"] = dc.lambda;
        } else {
          out["min_count"] = dc.min_count;
          out["max_count"] = dc.max_count;
          out["witness"] = dc.witness;
        }
        return out;
      },
      py::arg("code"), py::arg("w"), py::arg("t") = 3,
      py::arg("guard") = kDefaultEnumGuard);
  mod.def(
      "predicted_lambda_min_weight",
      [](unsigned m) { return to_py(predicted_lambda_min_weight(m)); },
      py::arg("m"));
  mod.def(
      "predicted_lambda_dual8",
      [](unsigned m) { return to_py(predicted_lambda_dual8(m)); },
      py::arg("m"));
}
