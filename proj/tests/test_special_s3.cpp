#include <doctest.h>

#include <cmath>

#include "zeta_rpa/exact_core.hpp"
#include "zeta_rpa/oracle.hpp"
#include "zeta_rpa/psi_rpa.hpp"
#include "zeta_rpa/special_s3.hpp"

using namespace zeta_rpa;

namespace {

// <x^4 c, q> from (-1)^j B_{j+4} (3)_{j+3} / (j+4)!.
BigRational apply_raw(const PolyQ& q) {
  BigRational acc = 0;
  for (int j = 0; j <= q.degree(); ++j) {
    BigRational mu = bernoulli(j + 4) * pochhammer(BigRational(3), j + 3) /
                     BigRational(factorial(static_cast<unsigned long>(j + 4)));
    if (j % 2 == 1) mu = -mu;
    acc += q.coeff(j) * mu;
  }
  return acc;
}

bool proportional(const PolyQ& a, const PolyQ& b) {
  return a.degree() == b.degree() && !a.is_zero() && a * b.leading() == b * a.leading();
}

bool is_odd(const PolyQ& p) {
  for (int j = 0; j <= p.degree(); j += 2) {
    if (p.coeff(j) != 0) return false;
  }
  return true;
}

// Apery's explicit binomial sums, independent of the recurrence.
BigInt apery_b_sum(int n) {
  BigInt acc = 0;
  for (int k = 0; k <= n; ++k) {
    BigInt t = binomial(n, k) * binomial(n + k, k);
    acc += t * t;
  }
  return acc;
}

BigRational apery_a_sum(int n) {
  BigRational h3 = 0;
  for (int m = 1; m <= n; ++m) h3 += BigRational(1, m * m * m);
  BigRational acc = 0;
  for (int k = 0; k <= n; ++k) {
    BigRational c = h3;
    for (int m = 1; m <= k; ++m) {
      BigRational t = 1 / BigRational(BigInt(2 * m * m * m) * binomial(n, m) * binomial(n + m, m));
      c += m % 2 == 1 ? t : BigRational(-t);
    }
    BigInt b = binomial(n, k) * binomial(n + k, k);
    acc += BigRational(b * b) * c;
  }
  return acc;
}

}  // namespace

TEST_CASE("Pi_m examples and routes") {
  CHECK(pi_m_s3(0) == PolyQ::constant(2));
  CHECK(pi_m_s3(1) == PolyQ(std::vector<BigRational>{3, 0, 3}));
  for (int m = 0; m <= 10; ++m) {
    CAPTURE(m);
    PolyQ p = pi_m_s3(m);
    CHECK(p.degree() == 2 * m);
    CHECK(eval_q(p, 1) == (m + 1) * (m + 2));
    CHECK(p == pi_m_s3(m, OrthRoute::Recurrence));
    if (m <= 8) CHECK(p == pi_m_s3(m, OrthRoute::Determinant));
  }
}

TEST_CASE("exact orthogonality") {
  CHECK(raw_moment_s3(0) == BigRational(-1, 12));
  for (int m = 1; m <= 10; ++m) {
    PolyQ p = pi_m_s3(m);
    for (int i = 0; i < m; ++i) CHECK(apply_raw(p.shifted(2 * i)) == 0);
    CHECK(apply_raw(p.shifted(2 * m)) != 0);
  }
}

TEST_CASE("moment identities") {
  CHECK(moment_s3(0) == BigRational(-1, 12));
  CHECK(moment_s3_pair(0, 0) == BigRational(-1, 12));
  for (int k = 0; k <= 8; ++k) {
    BigRational e(BigInt((k + 1) * (k + 1)), BigInt(2 * (k + 3) * (k + 2)));
    e.canonicalize();
    if (k % 2 == 0) e = -e;
    CHECK(moment_s3(k) == e);
    CHECK(apply_raw(binom_poly(-1, k) * binom_poly(k, k)) == e);
  }
  for (int k = 0; k <= 6; ++k) {
    for (int j = 0; j <= 6; ++j) {
      BigRational e = BigRational(1, 2 * (k + j + 3)) - BigRational(1, 2 * (k + j + 2));
      CHECK(moment_s3_pair(k, j) == e);
      CHECK(apply_raw(theta_basis_s3(k) * theta_basis_s3(j)) == e);
    }
  }
  for (int i = 0; i <= 10; ++i) CHECK(nu_moment_s3(i) == apply_raw(nu_s3(i)));
}

TEST_CASE("Jacobi connection") {
  for (int m = 0; m <= 6; ++m) CHECK(proportional(jacobi_connection_s3(m), pi_m_s3(m)));
}

TEST_CASE("Theta routes") {
  for (int m = 1; m <= 8; ++m) {
    CAPTURE(m);
    PolyQ th = theta_m_s3(m);
    CHECK(th.degree() == 2 * m - 1);
    CHECK(is_odd(th));
    CHECK(th == associated_poly(functional_s3(), pi_m_s3(m)));
    CHECK(th == theta_m_s3_compact(m));
  }
  CHECK(theta_m_s3(1) == PolyQ::monomial(BigRational(-1, 4), 1));
}

TEST_CASE("closed-form Pade equals the Hankel solve") {
  CHECK(psi_coeff(0, 3) == BigRational(1, 2));
  CHECK(psi_coeff(1, 3) == BigRational(1, 2));
  CHECK(psi_coeff(2, 3) == BigRational(1, 4));
  for (int m = 1; m <= 8; ++m) {
    CAPTURE(m);
    auto closed = pade_closed_s3(m);
    CHECK(same_rational_function(closed, pade(psi_series(3, 4 * m + 3), 2 * m + 2, 2 * m)));
    CHECK(closed.contact_order >= 4 * m + 3);
  }
}

TEST_CASE("rational approximations of zeta(3)") {
  for (int n = 0; n <= 4; ++n) {
    for (int m = 1; m <= 5; ++m) {
      for (BigRational a : {BigRational(1), BigRational(5, 2)}) {
        ApproxPairS3 r = zeta3_approx(n, m, a);
        CHECK(r.epsilon == epsilon_s3_binomial(n, m, a));
        CHECK(r.f == r.g * r.value);
        if (is_integer(a)) CHECK(r.value == rpa_exact(3, a, n, 2 * m + 2, 2 * m));
      }
    }
  }
}

TEST_CASE("integrality") {
  for (auto [n, m] : {std::pair{1, 2}, std::pair{4, 5}, std::pair{10, 10}}) CHECK_NOTHROW(integrality_s3(n, m));
  for (int n = 0; n <= 10; ++n) {
    for (int m = 1; m <= 10; ++m) {
      BigInt d = lcm_upto(m + 1);
      CHECK(is_integer(BigRational(d * d * d) * eval_q(theta_m_s3(m), n + 1)));
    }
  }
}

TEST_CASE("error bound") {
  CHECK(error_bound_s3(0, 1, 64).to_double() == doctest::Approx(1.0 / 90).epsilon(1e-12));
  CHECK(error_bound_s3(1, 1, 64).to_double() == doctest::Approx(1.0 / 225 / 3 * 6 / 5).epsilon(1e-12));
  CHECK(error_bound_s3(12, 12, 128) < 1e-30);
  BigFloat z3 = zeta_ref(3, 1, 200);
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= 8; ++m) {
      CHECK(abs(z3 - BigFloat(zeta3_approx(n, m, 1).value, 200)) <= error_bound_s3(n, m, 200));
    }
  }
}

TEST_CASE("rates") {
  RateReport r = rate_s3(BigFloat(1L, 128));
  CHECK(r.root.to_double() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.rate.to_double() == doctest::Approx(std::pow(1 + std::sqrt(2.0), 4)).epsilon(1e-12));
  CHECK(r.contraction.to_double() == doctest::Approx(0.591).epsilon(1e-3));
  CHECK_FALSE(rate_s3(BigFloat(2L, 128)).admissible);
  RateInterval iv = rate_interval_s3(0.5, 2.0, 0.01, 128);
  REQUIRE(iv.found);
  CHECK(std::fabs(iv.lo - 0.74) <= 0.01);
  CHECK(std::fabs(iv.hi - 1.36) <= 0.01);
}

TEST_CASE("Apery sequences") {
  std::vector<BigInt> b = apery_b(10);
  CHECK(b[0] == 1);
  CHECK(b[1] == 5);
  CHECK(b[2] == 73);
  CHECK(b[3] == 1445);
  CHECK(b[4] == 33001);
  std::vector<BigRational> a = apery_a(10);
  for (int n = 0; n < 10; ++n) {
    CHECK(b[static_cast<std::size_t>(n)] == apery_b_sum(n));
    CHECK(a[static_cast<std::size_t>(n)] == apery_a_sum(n));
  }
}

TEST_CASE("Apery crosscheck") {
  auto rows = apery_crosscheck(7, 256);
  for (const AperyRow& r : rows) {
    CAPTURE(r.m);
    CHECK(r.value_matches);
    CHECK(r.value == rpa_exact(3, 1, r.m, 2 * r.m - 1, 2 * r.m));
    CHECK(r.p == BigRational(r.q) * r.value);
  }
  for (std::size_t i = 1; i < 6; ++i) CHECK(rows[i].linear_form < rows[i - 1].linear_form);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].apery_linear_form < rows[i - 1].apery_linear_form);
  // RPA(2, 3, 4) sits within error-bound scale of zeta(3)
  BigFloat z3 = zeta_ref(3, 1, 200);
  CHECK(abs(z3 - BigFloat(rpa_exact(3, 1, 2, 3, 4), 200)) < 10 * error_bound_s3(2, 2, 200));
}

TEST_CASE("linear forms decay") {
  double first = linear_form_s3(1, 256).to_double();
  double ratio = std::exp(3.0) / std::pow(1 + std::sqrt(2.0), 4);
  for (int n = 1; n <= 40; ++n) {
    CAPTURE(n);
    double l = linear_form_s3(n, 256).to_double();
    CHECK(l <= 0.01 * std::pow(ratio, n) * std::pow(n + 1, 5));
    if (n >= 37) CHECK(l < 1e-4 * first);
  }
}
