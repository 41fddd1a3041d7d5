#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "zeta_rpa/exact_core.hpp"
#include "zeta_rpa/oracle.hpp"
#include "zeta_rpa/pade.hpp"
#include "zeta_rpa/psi_rpa.hpp"
#include "zeta_rpa/serialize.hpp"
#include "zeta_rpa/special_s2.hpp"
#include "zeta_rpa/special_s3.hpp"
#include "zeta_rpa/weights.hpp"

namespace py = pybind11;
using namespace zeta_rpa;

// Every entry point takes rationals as strings ("5/2", "1.3", "7") and returns
// a JSON document; the Python wrapper decodes it.
namespace {

int digits(long bits) { return static_cast<int>(static_cast<double>(bits) * 0.30103) + 2; }

std::string bernoulli_json(int k) { return Json(to_string(bernoulli(k))).dump(); }

std::string pade_json(const std::string& s, int m1, int m2) {
  if (s.empty()) return to_json(pade(psi_series_symbolic(m1 + m2 + 1), m1, m2)).dump();
  return to_json(pade(psi_series(parse_rational(s), m1 + m2 + 1), m1, m2)).dump();
}

std::string rpa_symbolic_json(int n, const std::string& a, int m1, int m2) {
  BigRational av = parse_rational(a);
  if (!is_integer(av) || sgn(av) <= 0) throw InvalidArgument("a must be a positive integer");
  RpaSymbolic r = rpa_symbolic(n, av.get_num(), m1, m2);
  Json j = to_json(r);
  j["display"] = to_string(r.ratfunc);
  return j.dump();
}

std::string rpa_eval_json(const std::string& s, const std::string& a, int n, int m1, int m2, long prec) {
  BigRational sv = parse_rational(s), av = parse_rational(a);
  RpaNumeric r = rpa_numeric(sv, av, n, m1, m2, prec);
  BigFloat ref = zeta_ref(sv, av, prec + 16);
  return Json{{"s", to_string(sv)},
              {"a", to_string(av)},
              {"n", n},
              {"m1", m1},
              {"m2", m2},
              {"pade_value", to_string(r.pade_value)},
              {"value", r.total.to_string(digits(prec))},
              {"oracle", ref.to_string(digits(prec))},
              {"abs_err", abs(r.total - ref).to_string(6)}}
      .dump();
}

std::string zeta_json(const std::string& s, const std::string& a, long prec) {
  return Json(zeta_ref(parse_rational(s), parse_rational(a), prec).to_string(digits(prec))).dump();
}

std::string s2_json(int n, int m, long prec) {
  ApproxPairS2 r = zeta2_approx(n, m, 1);
  auto [su, sv] = integrality_s2(n, m);
  BigFloat err = abs(zeta_constant("zeta2", prec + 16) - BigFloat(r.value, prec + 16));
  return Json{{"n", n},
              {"m", m},
              {"u", to_string(r.u)},
              {"v", to_string(r.v)},
              {"scaled_u", to_string(su)},
              {"scaled_v", to_string(sv)},
              {"bound", error_bound_s2(n, m, prec).to_string(6)},
              {"error", err.to_string(6)}}
      .dump();
}

std::string s3_json(int n, int m, long prec) {
  ApproxPairS3 r = zeta3_approx(n, m, 1);
  auto [sg, sf] = integrality_s3(n, m);
  BigFloat err = abs(zeta_constant("zeta3", prec + 16) - BigFloat(r.value, prec + 16));
  return Json{{"n", n},
              {"m", m},
              {"g", to_string(r.g)},
              {"f", to_string(r.f)},
              {"scaled_g", to_string(sg)},
              {"scaled_f", to_string(sf)},
              {"bound", error_bound_s3(n, m, prec).to_string(6)},
              {"error", err.to_string(6)}}
      .dump();
}

std::string apery_json(int mmax, long prec) {
  Json rows = Json::array();
  for (const AperyRow& r : apery_crosscheck(mmax, prec)) {
    rows.push_back(Json{{"m", r.m},
                        {"value", to_string(r.value)},
                        {"q", to_string(r.q)},
                        {"p", to_string(r.p)},
                        {"apery_b", to_string(r.apery_b)},
                        {"value_matches", r.value_matches},
                        {"q_over_b", to_string(r.q_over_b)},
                        {"linear_form", r.linear_form.to_string(6)},
                        {"apery_linear_form", r.apery_linear_form.to_string(6)}});
  }
  return rows.dump();
}

std::string weights_verify_json(const std::string& s, const std::string& a, long prec) {
  QuadratureConfig cfg;
  cfg.precision_bits = prec;
  CheckResult r = theorem1_check(parse_rational(s), parse_rational(a), cfg);
  return Json{{"rhs", r.value.to_string(digits(prec))},
              {"oracle", r.reference.to_string(digits(prec))},
              {"abs_err", r.abs_error.to_string(6)}}
      .dump();
}

std::string rates_json(const std::string& which, double lo, double hi, double step, long prec) {
  if (which != "s2" && which != "s3") throw InvalidArgument("case must be s2 or s3");
  RateInterval iv = which == "s2" ? rate_interval_s2(lo, hi, step, prec) : rate_interval_s3(lo, hi, step, prec);
  Json j{{"case", which}, {"found", iv.found}};
  if (iv.found) {
    j["lo"] = iv.lo;
    j["hi"] = iv.hi;
  }
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_zeta_rpa, m) {
  m.doc() = "Remainder Pade approximants for the Hurwitz zeta function";

  static PyObject* error = PyErr_NewException("zeta_rpa._zeta_rpa.ZetaRpaError", PyExc_ValueError, nullptr);
  m.attr("ZetaRpaError") = py::handle(error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(py::str(e.what()));
      exc.attr("code") = e.code();
      PyErr_SetObject(error, exc.ptr());
    }
  });

  m.def("bernoulli", &bernoulli_json, py::arg("k"));
  m.def("pade", &pade_json, py::arg("s"), py::arg("m1"), py::arg("m2"));
  m.def("rpa_symbolic", &rpa_symbolic_json, py::arg("n"), py::arg("a"), py::arg("m1"), py::arg("m2"));
  m.def("rpa_eval", &rpa_eval_json, py::arg("s"), py::arg("a"), py::arg("n"), py::arg("m1"), py::arg("m2"),
        py::arg("precision"));
  m.def("zeta", &zeta_json, py::arg("s"), py::arg("a"), py::arg("precision"));
  m.def("s2_apery", &s2_json, py::arg("n"), py::arg("m"), py::arg("precision"));
  m.def("s3_apery", &s3_json, py::arg("n"), py::arg("m"), py::arg("precision"));
  m.def("s3_apery_crosscheck", &apery_json, py::arg("mmax"), py::arg("precision"));
  m.def("weights_verify", &weights_verify_json, py::arg("s"), py::arg("a"), py::arg("precision"));
  m.def("rates_scan", &rates_json, py::arg("case"), py::arg("lo"), py::arg("hi"), py::arg("step"),
        py::arg("precision"));
}
