#include <doctest.h>

#include <random>

#include "zeta_rpa/exact_core.hpp"
#include "zeta_rpa/psi_rpa.hpp"
#include "zeta_rpa/special_s2.hpp"

using namespace zeta_rpa;

namespace {

std::vector<BigRational> geometric(int n) { return std::vector<BigRational>(static_cast<std::size_t>(n), 1); }

std::vector<BigRational> exp_series(int n) {
  std::vector<BigRational> c;
  for (int k = 0; k < n; ++k) c.emplace_back(BigInt(1), factorial(static_cast<unsigned long>(k)));
  return c;
}

PolyQ Q(std::initializer_list<BigRational> c) { return PolyQ(std::vector<BigRational>(c)); }

bool proportional(const PolyQ& a, const PolyQ& b) {
  if (a.degree() != b.degree() || a.is_zero()) return false;
  return a * b.leading() == b * a.leading();
}

}  // namespace

TEST_CASE("geometric series [0/1]") {
  auto pa = pade(geometric(4), 0, 1);
  CHECK(pa.num == Q({1}));
  CHECK(pa.den == Q({1, -1}));
  CHECK(pa.contact_order >= 2);
}

TEST_CASE("exponential [1/1] solved by hand") {
  auto pa = pade(exp_series(6), 1, 1);
  CHECK(pa.num == Q({1, BigRational(1, 2)}));
  CHECK(pa.den == Q({1, BigRational(-1, 2)}));
  CHECK(pa.contact_order >= 3);
  CHECK(pa.eval(BigRational(1)) == 3);
}

TEST_CASE("symbolic [2/1] of the remainder kernel at t = 1") {
  auto pa = pade(psi_series_symbolic(4), 2, 1);
  RatFunc s = RatFunc::s();
  RatFunc expected = (s + RatFunc(2)) * (s + RatFunc(3)) / (RatFunc(12) * (s - RatFunc(1)));
  CHECK(pa.eval(RatFunc(1)) == expected);
}

TEST_CASE("shifted route agrees with the direct solve") {
  CHECK(same_rational_function(pade_shifted(geometric(6), 1, 1), pade(geometric(6), 2, 1)));
  CHECK(same_rational_function(pade_shifted(exp_series(8), 2, 1), pade(exp_series(8), 3, 2)));
  std::vector<BigRational> psi2 = psi_series(2, 12);
  CHECK(same_rational_function(pade_shifted(psi2, 3, 1), pade(psi2, 4, 3)));
  std::vector<BigRational> psi52 = psi_series(BigRational(5, 2), 16);
  for (int m2 = 1; m2 <= 5; ++m2) {
    for (int p = 0; p <= 3; ++p) {
      CAPTURE(m2);
      CAPTURE(p);
      // odd-index kernel coefficients vanish, so some blocks are singular on both routes
      bool degenerate = false;
      try {
        pade(psi52, m2 + p, m2);
      } catch (const DegenerateTable&) {
        degenerate = true;
      }
      if (degenerate) {
        CHECK_THROWS_AS(pade_shifted(psi52, m2, p), DegenerateTable);
        continue;
      }
      CHECK(same_rational_function(pade_shifted(psi52, m2, p), pade(psi52, m2 + p, m2)));
    }
  }
  auto sym = psi_series_symbolic(8);
  CHECK(same_rational_function(pade_shifted(sym, 2, 2), pade(sym, 4, 2)));
}

TEST_CASE("contact order") {
  for (int total = 0; total <= 20; ++total) {
    for (int m2 = 0; m2 <= total; ++m2) {
      int m1 = total - m2;
      if (m1 < m2 - 1) continue;  // the kernel series is odd-degenerate below the diagonal
      auto series = psi_series(BigRational(7, 2), total + 1);
      int order = -1;
      try {
        order = pade(series, m1, m2).contact_order;
      } catch (const DegenerateTable&) {
        continue;
      }
      CHECK(order >= m1 + m2 + 1);
    }
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BigRational> c;
    for (int k = 0; k < 9; ++k) c.push_back(make_rational(d(rng), 1 + std::abs(d(rng))));
    int m1 = trial % 5, m2 = 4 - m1;
    int order = -1;
    try {
      order = pade(c, m1, m2).contact_order;
    } catch (const DegenerateTable&) {
      continue;
    }
    CHECK(order >= m1 + m2 + 1);
  }
}

TEST_CASE("injected fault is located") {
  auto series = exp_series(8);
  auto pa = pade(series, 3, 2);
  pa.num = pa.num + PolyQ::monomial(1, 3);
  CHECK(verify_contact(series, pa) == 3);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(pade(geometric(4), 1, 2), DegenerateTable);
  CHECK_THROWS_AS(pade(geometric(2), 1, 1), InsufficientCoefficients);
  CHECK_THROWS_AS(pade(geometric(3), -1, 1), InvalidArgument);
  CHECK_THROWS_AS(pade_shifted(geometric(3), 1, 1), InsufficientCoefficients);
}

TEST_CASE("reversed denominator is orthogonal for the moment functional") {
  MomentFunctional f = functional_s2();
  for (int m2 = 1; m2 <= 8; ++m2) {
    std::vector<BigRational> c;
    for (int j = 0; j < 2 * m2 + 1; ++j) c.push_back(f.moment(j));
    auto pa = pade(c, m2 - 1, m2);
    PolyQ rev = pa.den.reversed(m2);
    for (int i = 0; i < m2; ++i) CHECK(f.apply(rev.shifted(i)) == 0);
  }
}

TEST_CASE("determinant route") {
  MomentFunctional f = functional_s2();
  std::vector<PolyQ> mono;
  for (int i = 0; i <= 8; ++i) mono.push_back(PolyQ::monomial(1, i));
  PolyQ p0 = orth_poly_determinant(f, mono, 0, Normalization::leading(1));
  CHECK(p0 == Q({1}));
  CHECK(orth_poly_determinant(f, mono, 1, Normalization::value_at(1, 6)) == Q({0, 6}));
  CHECK(orth_poly_determinant(f, mono, 2, Normalization::value_at(1, 12)) == Q({2, 0, 10}));
  for (int n = 1; n <= 8; ++n) {
    std::vector<BigRational> c;
    for (int j = 0; j < 2 * n + 1; ++j) c.push_back(f.moment(j));
    PolyQ hankel = pade(c, n - 1, n).den.reversed(n);
    CHECK(proportional(orth_poly_determinant(f, mono, n, Normalization::leading(1)), hankel));
  }
}

TEST_CASE("associated polynomials") {
  MomentFunctional f = functional_s2();
  CHECK(associated_poly(f, Q({5})).is_zero());
  MomentFunctional g{[](int j) { return make_rational(j + 2, 3); }};
  CHECK(associated_poly(g, Q({0, 1})) == Q({BigRational(2, 3)}));
  CHECK(associated_poly(f, Q({0, 6})) == Q({1}));
}
