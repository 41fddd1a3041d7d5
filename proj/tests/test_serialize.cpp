#include <doctest.h>

#include "reference_expressions.hpp"
#include "zeta_rpa/psi_rpa.hpp"
#include "zeta_rpa/serialize.hpp"

using namespace zeta_rpa;

TEST_CASE("rationals and polynomials") {
  CHECK(to_json(BigRational(-691, 2730)) == "-691/2730");
  CHECK(to_json(BigRational(4)) == "4");
  PolyQ p(std::vector<BigRational>{BigRational(1, 2), 0, BigRational(-3)});
  Json j = to_json(p);
  CHECK(j.dump() == R"(["1/2","0","-3"])");
  CHECK(poly_from_json(j) == p);
  CHECK(to_json(PolyQ()).dump() == "[]");
}

TEST_CASE("rational functions round-trip") {
  for (const auto& e : ref::expressions()) CHECK(ratfunc_from_json(to_json(e.ratfunc)) == e.ratfunc);
  RatFunc f = ratfunc_from_json(Json::parse(R"({"num":["-1","0","1"],"den":["-1","1"]})"));
  CHECK(f == RatFunc(PolyQ(std::vector<BigRational>{1, 1})));
}

TEST_CASE("Pade approximants round-trip") {
  auto pa = pade(psi_series(BigRational(5, 2), 8), 4, 3);
  Json j = to_json(pa);
  CHECK(j["field"] == "Q");
  auto back = pade_q_from_json(Json::parse(j.dump()));
  CHECK(back.num == pa.num);
  CHECK(back.den == pa.den);
  CHECK(back.m1 == 4);

  auto ps = pade(psi_series_symbolic(5), 2, 2);
  Json js = to_json(ps);
  CHECK(js["field"] == "Q(s)");
  auto bs = pade_qs_from_json(Json::parse(js.dump()));
  CHECK(bs.num == ps.num);
  CHECK(bs.den == ps.den);
  CHECK_THROWS_AS(pade_q_from_json(js), ParseError);
}

TEST_CASE("symbolic RPA round-trip") {
  RpaSymbolic r = rpa_symbolic(2, 1, 3, 2);
  Json j = to_json(r);
  CHECK(j["partial_terms"] == 2);
  CHECK(j["factor_exponent"] == "1-s");
  CHECK(j["base"] == "3");
  RpaSymbolic back = rpa_symbolic_from_json(Json::parse(j.dump()));
  CHECK(back.n == r.n);
  CHECK(back.a == r.a);
  CHECK(back.base == r.base);
  CHECK(back.term_bases == r.term_bases);
  CHECK(back.ratfunc == r.ratfunc);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(rational_from_json(Json(3)), ParseError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"a":1})")), ParseError);
  CHECK_THROWS_AS(ratfunc_from_json(Json::parse(R"({"num":["1"]})")), ParseError);
  CHECK_THROWS_AS(ratfunc_from_json(Json::parse(R"({"num":["1"],"den":[]})")), ZeroDenominator);
}
