#include <doctest.h>

#include <cmath>

#include "zeta_rpa/exact_core.hpp"
#include "zeta_rpa/oracle.hpp"
#include "zeta_rpa/psi_rpa.hpp"
#include "zeta_rpa/special_s2.hpp"

using namespace zeta_rpa;

namespace {

// <x^2 c, q> from the raw moments (-1)^j B_{j+2}, expanded coefficient by coefficient.
BigRational apply_raw(const PolyQ& q) {
  BigRational acc = 0;
  for (int j = 0; j <= q.degree(); ++j) {
    BigRational mu = bernoulli(j + 2);
    if (j % 2 == 1) mu = -mu;
    acc += q.coeff(j) * mu;
  }
  return acc;
}

BigRational fact(int k) { return BigRational(factorial(static_cast<unsigned long>(k))); }

}  // namespace

TEST_CASE("P_m examples") {
  CHECK(p_m_s2(0) == PolyQ::constant(2));
  CHECK(p_m_s2(1) == PolyQ::monomial(6, 1));
  CHECK(p_m_s2(2) == PolyQ(std::vector<BigRational>{2, 0, 10}));
  for (int m = 0; m <= 12; ++m) CHECK(eval_q(p_m_s2(m), 1) == (m + 1) * (m + 2));
}

TEST_CASE("P_m routes agree") {
  for (int m = 0; m <= 12; ++m) {
    CAPTURE(m);
    PolyQ p = p_m_s2(m, OrthRoute::BinomialSum);
    CHECK(p == p_m_s2(m, OrthRoute::Recurrence));
    CHECK(p == p_m_s2(m, OrthRoute::Determinant));
  }
}

TEST_CASE("exact orthogonality") {
  for (int m = 1; m <= 12; ++m) {
    PolyQ p = p_m_s2(m);
    for (int i = 0; i < m; ++i) CHECK(apply_raw(p.shifted(i)) == 0);
    CHECK(apply_raw(p.shifted(m)) != 0);
  }
}

TEST_CASE("modified and basis moments") {
  CHECK(modified_moment_s2(0) == BigRational(1, 6));
  CHECK(modified_moment_s2(1) == BigRational(-1, 6));
  CHECK(raw_moment_s2(0) == bernoulli(2));
  for (int k = 0; k <= 8; ++k) {
    BigRational expected = BigRational(k + 1) * fact(k + 1) / fact(k + 3);
    if (k % 2 == 1) expected = -expected;
    CHECK(modified_moment_s2(k) == expected);
    CHECK(apply_raw(binom_poly(-1, k)) == expected);
    for (int j = 0; j <= 8; ++j) {
      BigRational e = 1 / fact(k + j + 3);
      if ((k + j) % 2 == 1) e = -e;
      CHECK(apply_raw(basis_e_s2(k) * basis_e_s2(j)) == e);
      CHECK(modified_pair_moment_s2(k, j) == apply_raw(binom_poly(-1, k) * binom_poly(-1, j)));
    }
  }
}

TEST_CASE("associated polynomial routes") {
  CHECK(r_m_s2(1) == PolyQ::constant(1));
  for (int m = 1; m <= 10; ++m) {
    CHECK(r_m_s2(m) == r_m_s2_newton(m));
    CHECK(r_m_s2(m) == associated_poly(functional_s2(), p_m_s2(m)));
  }
}

TEST_CASE("closed-form Pade equals the Hankel solve") {
  for (int m = 1; m <= 10; ++m) {
    CAPTURE(m);
    auto closed = pade_closed_s2(m);
    auto generic = pade(psi_series(2, 2 * m + 2), m + 1, m);
    CHECK(same_rational_function(closed, generic));
    CHECK(closed.contact_order >= 2 * m + 2);
  }
}

TEST_CASE("rational approximations of zeta(2)") {
  ApproxPairS2 z = zeta2_approx(2, 0, 1);
  CHECK(z.epsilon == 0);
  CHECK(z.value == 1 + BigRational(1, 4) + BigRational(1, 3) + BigRational(1, 18));
  ApproxPairS2 p = zeta2_approx(1, 1, 1);
  auto pa = pade(psi_series(2, 4), 2, 1);
  CHECK(p.value == 1 + BigRational(1, 2) * pa.eval(BigRational(1, 2)));
  for (int n = 0; n <= 5; ++n) {
    for (int m = 1; m <= 6; ++m) {
      for (BigRational a : {BigRational(1), BigRational(3, 2), BigRational(2)}) {
        ApproxPairS2 r = zeta2_approx(n, m, a);
        CHECK(r.epsilon == epsilon_s2_binomial(n, m, a));
        CHECK(r.v == r.u * r.value);
        if (is_integer(a)) CHECK(r.value == rpa_exact(2, a, n, m + 1, m));
      }
    }
  }
}

TEST_CASE("integrality") {
  for (auto [n, m] : {std::pair{1, 1}, std::pair{3, 4}, std::pair{10, 10}}) CHECK_NOTHROW(integrality_s2(n, m));
  for (int n = 0; n <= 10; ++n) {
    for (int m = 1; m <= 10; ++m) {
      BigInt d = lcm_upto(m + 2);
      BigRational x = BigRational(d * d) * eval_q(r_m_s2(m), n + 1);
      CHECK(is_integer(x));
    }
  }
}

TEST_CASE("error bound") {
  for (int m = 1; m <= 6; ++m) {
    double expected = 2.0 / (M_PI * (2 * m + 3) * (m + 1) * (m + 2));
    CHECK(error_bound_s2(0, m, 64).to_double() == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(error_bound_s2(1, 1, 64).to_double() == doctest::Approx(12.0 / (M_PI * 5 * 144)).epsilon(1e-12));
  // P_15(16) = 705951252118284
  double p15 = 705951252118284.0;
  CHECK(error_bound_s2(15, 15, 128).to_double() ==
        doctest::Approx(2.0 * 16 * 17 / (M_PI * 33 * p15 * p15)).epsilon(1e-12));
  CHECK(error_bound_s2(15, 15, 128) < 2e-29);
  CHECK(eval_q(p_m_s2(15), 16) == BigInt("705951252118284"));
  BigFloat z2 = zeta_ref(2, 1, 200);
  for (int n = 1; n <= 10; ++n) {
    for (int m = 1; m <= 10; ++m) {
      BigFloat err = abs(z2 - BigFloat(zeta2_approx(n, m, 1).value, 200));
      CHECK(err <= error_bound_s2(n, m, 200));
    }
  }
}

TEST_CASE("rates") {
  BigFloat one(1L, 128);
  RateReport r = rate_s2(one);
  CHECK(r.root.to_double() == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-12));
  CHECK(r.rate.to_double() == doctest::Approx(std::pow((1 + std::sqrt(5.0)) / 2, 5)).epsilon(1e-12));
  CHECK(r.contraction.to_double() == doctest::Approx(0.666).epsilon(1e-3));
  CHECK(r.admissible);
  CHECK_FALSE(rate_s2(BigFloat(0.5, 128)).admissible);
  RateInterval iv = rate_interval_s2(0.5, 2.0, 0.01, 128);
  REQUIRE(iv.found);
  CHECK(std::fabs(iv.lo - 0.74) <= 0.01);
  CHECK(std::fabs(iv.hi - 1.53) <= 0.01);
}

TEST_CASE("linear forms decay") {
  // d_{n+2} jumps at primes, so the sequence is not monotone; it sits under
  // a geometric envelope with ratio e^2 / rho(1) ~ 0.666.
  double first = linear_form_s2(1, 256).to_double();
  for (int n = 1; n <= 40; ++n) {
    CAPTURE(n);
    double l = linear_form_s2(n, 256).to_double();
    CHECK(l <= 3.0 * std::pow(2.0 / 3.0, n) * (n + 1) * (n + 1));
    if (n >= 33) CHECK(l < 1e-4 * first);
  }
}
