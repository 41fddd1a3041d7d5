#include "zeta_rpa/serialize.hpp"

namespace zeta_rpa {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParseError("json: " + what);
}

// Q(s) coefficients are stored as {"num","den"} objects; Q coefficients as strings.
Json poly_rf_to_json(const Poly<RatFunc>& p) {
  Json out = Json::array();
  for (const RatFunc& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Poly<RatFunc> poly_rf_from_json(const Json& j) {
  require(j.is_array(), "expected an array of rational functions");
  std::vector<RatFunc> c;
  for (const Json& e : j) c.push_back(ratfunc_from_json(e));
  return Poly<RatFunc>(std::move(c));
}

}  // namespace

Json to_json(const BigRational& x) { return to_string(x); }

Json to_json(const PolyQ& p) {
  Json out = Json::array();
  for (const BigRational& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const PadeApprox<BigRational>& pa) {
  return Json{{"m1", pa.m1}, {"m2", pa.m2}, {"num", to_json(pa.num)}, {"den", to_json(pa.den)}, {"field", "Q"}};
}

Json to_json(const PadeApprox<RatFunc>& pa) {
  return Json{{"m1", pa.m1},
              {"m2", pa.m2},
              {"num", poly_rf_to_json(pa.num)},
              {"den", poly_rf_to_json(pa.den)},
              {"field", "Q(s)"}};
}

Json to_json(const RpaSymbolic& r) {
  return Json{{"partial_terms", r.n},
              {"a", to_string(r.a)},
              {"factor_exponent", "1-s"},
              {"base", to_string(r.base)},
              {"ratfunc", to_json(r.ratfunc)},
              {"m1", r.m1},
              {"m2", r.m2}};
}

BigRational rational_from_json(const Json& j) {
  require(j.is_string(), "expected a rational string");
  return parse_rational(j.get<std::string>());
}

PolyQ poly_from_json(const Json& j) {
  require(j.is_array(), "expected an array of coefficients");
  std::vector<BigRational> c;
  for (const Json& e : j) c.push_back(rational_from_json(e));
  return PolyQ(std::move(c));
}

RatFunc ratfunc_from_json(const Json& j) {
  require(j.is_object() && j.contains("num") && j.contains("den"), "expected {num, den}");
  return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

PadeApprox<BigRational> pade_q_from_json(const Json& j) {
  require(j.is_object() && j.value("field", "") == "Q", "expected a Pade approximant over Q");
  PadeApprox<BigRational> pa;
  pa.m1 = j.at("m1").get<int>();
  pa.m2 = j.at("m2").get<int>();
  pa.num = poly_from_json(j.at("num"));
  pa.den = poly_from_json(j.at("den"));
  return pa;
}

PadeApprox<RatFunc> pade_qs_from_json(const Json& j) {
  require(j.is_object() && j.value("field", "") == "Q(s)", "expected a Pade approximant over Q(s)");
  PadeApprox<RatFunc> pa;
  pa.m1 = j.at("m1").get<int>();
  pa.m2 = j.at("m2").get<int>();
  pa.num = poly_rf_from_json(j.at("num"));
  pa.den = poly_rf_from_json(j.at("den"));
  return pa;
}

RpaSymbolic rpa_symbolic_from_json(const Json& j) {
  require(j.is_object() && j.value("factor_exponent", "") == "1-s", "expected a symbolic RPA");
  RpaSymbolic r;
  r.n = j.at("partial_terms").get<int>();
  r.a = BigInt(j.at("a").get<std::string>());
  r.base = BigInt(j.at("base").get<std::string>());
  for (int k = 0; k < r.n; ++k) r.term_bases.push_back(r.a + k);
  r.ratfunc = ratfunc_from_json(j.at("ratfunc"));
  r.m1 = j.value("m1", 0);
  r.m2 = j.value("m2", 0);
  return r;
}

std::string float_string(const BigFloat& x, int digits) { return x.to_string(digits); }

}  // namespace zeta_rpa
