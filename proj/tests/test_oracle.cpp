#include <doctest.h>

#include "zeta_rpa/oracle.hpp"

using namespace zeta_rpa;

namespace {

BigFloat riemann(const BigRational& s, long prec) { return mpfr_zeta_value(BigFloat(s, prec)); }

}  // namespace

TEST_CASE("Riemann zeta against MPFR") {
  for (BigRational s : {BigRational(2), BigRational(5, 2), BigRational(3), BigRational(4), BigRational(11, 3)}) {
    CHECK(abs(zeta_ref(s, 1, 200) - riemann(s, 240)) < ldexp(BigFloat(1L, 240), -200));
  }
  CHECK(abs(zeta_ref(BigRational(1, 2), 1, 160) - riemann(BigRational(1, 2), 200)) < ldexp(BigFloat(1L, 200), -150));
}

TEST_CASE("Hurwitz relations") {
  BigFloat tol = ldexp(BigFloat(1L, 240), -195);
  for (BigRational s : {BigRational(2), BigRational(5, 2), BigRational(4)}) {
    BigFloat sf(s, 240);
    BigFloat z = riemann(s, 240);
    CHECK(abs(zeta_ref(s, BigRational(1, 2), 200) - (pow(BigFloat(2L, 240), sf) - 1L) * z) < tol);
    CHECK(abs(zeta_ref(s, 3, 200) - (z - 1L - pow(BigFloat(2L, 240), -sf))) < tol);
    BigRational a(13, 10);
    CHECK(abs(zeta_ref(s, a, 200) - pow(BigFloat(a, 240), -sf) - zeta_ref(s, a + 1, 200)) < tol);
  }
}

TEST_CASE("Euler-Maclaurin and Hermite agree") {
  for (BigRational s : {BigRational(2), BigRational(5, 2), BigRational(3), BigRational(4)}) {
    for (BigRational a : {BigRational(1, 2), BigRational(1), BigRational(13, 10), BigRational(3)}) {
      BigFloat em = zeta_ref(s, a, 200, OracleMethod::EulerMaclaurin);
      BigFloat he = zeta_ref(s, a, 200, OracleMethod::Hermite);
      CHECK(abs(em - he) < ldexp(BigFloat(1L, 240), -190));
    }
  }
}

TEST_CASE("Hermite at non-positive s") {
  for (BigRational a : {BigRational(1, 2), BigRational(1), BigRational(13, 10), BigRational(3)}) {
    BigFloat af(a, 200);
    CHECK(abs(zeta_ref(0, a, 160) - (BigFloat(BigRational(1, 2), 200) - af)) < 1e-40);
    // zeta(-1, a) = -(a^2 - a + 1/6)/2
    BigRational b2 = a * a - a + BigRational(1, 6);
    CHECK(abs(zeta_ref(-1, a, 160) + BigFloat(b2 / 2, 200)) < 1e-40);
    // s = 1/2 is below the Euler-Maclaurin range
    CHECK_THROWS_AS(zeta_ref(BigRational(1, 2), a, 128, OracleMethod::EulerMaclaurin), InvalidArgument);
  }
}

TEST_CASE("precision refinement is consistent") {
  for (BigRational s : {BigRational(2), BigRational(7, 2)}) {
    BigFloat lo = zeta_ref(s, BigRational(13, 10), 128);
    BigFloat hi = zeta_ref(s, BigRational(13, 10), 256);
    CHECK(abs(lo - hi) < ldexp(BigFloat(1L, 256), -127));
  }
}

TEST_CASE("errors and constants") {
  CHECK_THROWS_AS(zeta_ref(1, 1, 128), PoleAtOne);
  CHECK_THROWS_AS(zeta_ref(2, 0, 128), InvalidArgument);
  BigFloat pi = const_pi(200);
  CHECK(abs(zeta_constant("zeta2", 160) - pi * pi / 6L) < 1e-45);
  CHECK(abs(zeta_constant("zeta3", 160) - riemann(3, 200)) < 1e-45);
  CHECK(abs(zeta_constant("pi", 160) - pi) < 1e-45);
  CHECK_THROWS_AS(zeta_constant("e", 64), InvalidArgument);
}
