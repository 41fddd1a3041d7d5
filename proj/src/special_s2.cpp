#include "zeta_rpa/special_s2.hpp"

#include <cmath>

#include "zeta_rpa/exact_core.hpp"
#include "zeta_rpa/oracle.hpp"
#include "zeta_rpa/psi_rpa.hpp"

namespace zeta_rpa {

namespace {

PolyQ p_binomial(int m) {
  PolyQ p;
  for (int k = 0; k <= m; ++k) {
    BigInt w = binomial(m + 1, k + 1) * binomial(m + k + 2, k + 1);
    p += binom_poly(-1, k) * BigRational(w);
  }
  return p;
}

PolyQ p_recurrence(int m) {
  PolyQ prev;  // P_{-1}
  PolyQ cur = PolyQ::constant(2);
  for (int j = 0; j < m; ++j) {
    BigRational f(BigInt(2 * (2 * j + 3)), BigInt((j + 1) * (j + 2)));
    f.canonicalize();
    PolyQ next = cur.shifted(1) * f + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Head of the s = 2 approximation: sum_{k<n} (k+a)^{-2} + 1/N + 1/(2N^2).
BigRational head_s2(int n, const BigRational& a) {
  BigRational h = 0;
  for (int k = 0; k < n; ++k) {
    BigRational b = a + k;
    h += 1 / (b * b);
  }
  BigRational nn = a + n;
  h += 1 / nn;
  h += 1 / (2 * nn * nn);
  return h;
}

}  // namespace

PolyQ p_m_s2(int m, OrthRoute route) {
  if (m < 0) throw InvalidArgument("p_m_s2: m must be >= 0");
  switch (route) {
    case OrthRoute::BinomialSum:
      return p_binomial(m);
    case OrthRoute::Recurrence:
      return p_recurrence(m);
    case OrthRoute::Determinant: {
      std::vector<PolyQ> basis;
      for (int j = 0; j <= m; ++j) basis.push_back(PolyQ::monomial(1, j));
      BigRational at_one(BigInt((m + 1) * (m + 2)));
      return orth_poly_determinant(functional_s2(), basis, m, Normalization::value_at(1, at_one));
    }
  }
  throw InvalidArgument("p_m_s2: unknown route");
}

BigRational raw_moment_s2(int j) {
  BigRational b = bernoulli(j + 2);
  return j % 2 == 0 ? b : BigRational(-b);
}

MomentFunctional functional_s2() { return MomentFunctional{raw_moment_s2}; }

BigRational modified_moment_s2(int k) {
  BigRational r(BigInt(k + 1) * factorial(static_cast<unsigned long>(k + 1)),
                factorial(static_cast<unsigned long>(k + 3)));
  r.canonicalize();
  return k % 2 == 0 ? r : BigRational(-r);
}

BigRational modified_pair_moment_s2(int k, int j) {
  BigInt num = BigInt(k + 1) * factorial(static_cast<unsigned long>(k + 1)) * BigInt(j + 1) *
               factorial(static_cast<unsigned long>(j + 1));
  BigRational r(num, factorial(static_cast<unsigned long>(k + j + 3)));
  r.canonicalize();
  return (k + j) % 2 == 0 ? r : BigRational(-r);
}

PolyQ basis_e_s2(int k) {
  BigRational scale(BigInt(1), BigInt(k + 1) * factorial(static_cast<unsigned long>(k + 1)));
  return binom_poly(-1, k) * scale;
}

PolyQ r_m_s2(int m) {
  if (m < 1) throw InvalidArgument("r_m_s2: m must be >= 1");
  return associated_poly(functional_s2(), p_m_s2(m));
}

PolyQ r_m_s2_newton(int m) {
  if (m < 1) throw InvalidArgument("r_m_s2_newton: m must be >= 1");
  // C(t-1,k) / C(t-1,i) = C(t-1-i, k-i) / C(k,i) as polynomials in t.
  PolyQ r;
  for (int k = 1; k <= m; ++k) {
    BigInt w = binomial(m + 1, k + 1) * binomial(m + k + 2, k + 1);
    PolyQ inner;
    for (int i = 1; i <= k; ++i) {
      BigRational c(BigInt(i % 2 == 1 ? 1 : -1), binomial(k, i) * BigInt((i + 1) * (i + 2)));
      c.canonicalize();
      inner += binom_poly(-1 - i, k - i) * c;
    }
    r += inner * BigRational(w);
  }
  return r;
}

PadeApprox<BigRational> pade_closed_s2(int m) {
  if (m < 1) throw InvalidArgument("pade_closed_s2: m must be >= 1");
  PolyQ p = p_m_s2(m);
  PolyQ r = r_m_s2(m);
  PolyQ den = p.reversed(m);
  PolyQ num = PolyQ{BigRational(1), BigRational(1, 2)} * den + r.reversed(m - 1).shifted(2);
  BigRational lead = den.coeff(0);
  PadeApprox<BigRational> pa;
  pa.m1 = m + 1;
  pa.m2 = m;
  pa.num = num / lead;
  pa.den = den / lead;
  pa.contact_order = verify_contact(psi_series(2, 2 * m + 4), pa);
  return pa;
}

ApproxPairS2 zeta2_approx(int n, int m, const BigRational& a) {
  if (n < 0 || m < 0 || sgn(a) <= 0) throw InvalidArgument("zeta2_approx: need n >= 0, m >= 0, a > 0");
  ApproxPairS2 r;
  r.n = n;
  r.m = m;
  r.a = a;
  BigRational nn = a + n;
  BigRational pn = eval_q(p_m_s2(m), nn);
  if (sgn(pn) == 0) throw ZeroDenominator("zeta2_approx: P_m vanishes at n + a");
  r.epsilon = m == 0 ? BigRational(0) : BigRational(eval_q(r_m_s2(m), nn) / pn);
  BigRational head = head_s2(n, a);
  r.value = head + r.epsilon / (nn * nn);
  BigInt d = lcm_upto(m + 2);
  d *= d;
  BigInt dh = head.get_den();
  BigInt g;
  mpz_gcd(g.get_mpz_t(), dh.get_mpz_t(), d.get_mpz_t());
  BigInt mult = nn.get_num() * nn.get_num();
  BigInt part = dh / g;
  mpz_lcm(mult.get_mpz_t(), mult.get_mpz_t(), part.get_mpz_t());
  r.u = BigRational(mult) * pn;
  r.v = r.u * r.value;
  return r;
}

BigRational epsilon_s2_binomial(int n, int m, const BigRational& a) {
  BigRational nn = a + n;
  BigRational num = 0;
  BigRational den = 0;
  for (int k = 0; k <= m; ++k) {
    BigRational w(binomial(m + 1, k + 1) * binomial(m + k + 2, k + 1));
    BigRational inner = 0;
    for (int i = 1; i <= k; ++i) {
      BigRational term = binomial(BigRational(nn - i - 1), k - i);
      term /= BigRational(binomial(k, i) * BigInt((i + 1) * (i + 2)));
      if (i % 2 == 0) term = -term;
      inner += term;
    }
    num += w * inner;
    den += w * binomial(BigRational(nn - 1), k);
  }
  if (sgn(den) == 0) throw ZeroDenominator("epsilon_s2_binomial: vanishing denominator");
  return num / den;
}

std::pair<BigInt, BigInt> integrality_s2(int n, int m) {
  ApproxPairS2 p = zeta2_approx(n, m, 1);
  BigInt d = lcm_upto(m + 2);
  d *= d;
  BigRational su = p.u * BigRational(d);
  BigRational sv = p.v * BigRational(d);
  if (!is_integer(su) || !is_integer(sv)) {
    throw IntegralityViolation("d_{m+2}^2 u or v not integral at n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  return {su.get_num(), sv.get_num()};
}

BigFloat error_bound_s2(int n, int m, long precision_bits) {
  long prec = precision_bits + 32;
  BigRational pn = eval_q(p_m_s2(m), BigRational(n + 1));
  BigRational c(BigInt(2 * (m + 1) * (m + 2)), BigInt(2 * m + 3));
  c.canonicalize();
  BigRational q = c / (pn * pn);
  return BigFloat(q, prec) / const_pi(prec);
}

BigFloat linear_form_s2(int n, long precision_bits) {
  auto [du, dv] = integrality_s2(n, n);
  // the form is tiny next to its terms, so carry their size as guard bits
  long prec = precision_bits + 32 + static_cast<long>(mpz_sizeinbase(du.get_mpz_t(), 2));
  return abs(zeta_constant("zeta2", prec) * BigFloat(du, prec) - BigFloat(dv, prec));
}

RateReport rate_s2(const BigFloat& r) {
  long prec = r.precision();
  RateReport rep;
  rep.r = r;
  BigFloat r2 = r * r;
  // sigma solves t^2 + r^2 t - r^2 = 0
  rep.root = (sqrt(r2 * r2 + 4L * r2) - r2) / 2L;
  const BigFloat& sg = rep.root;
  rep.rate = pow(r + sg, r) / ((1L - sg) * pow(r - sg, r));
  BigFloat e = exp(2L * max(r, BigFloat(1L, prec)));
  rep.contraction = e / rep.rate;
  rep.admissible = rep.contraction < BigFloat(1L, prec);
  return rep;
}

RateInterval rate_interval(const std::function<RateReport(const BigFloat&)>& rate, double lo, double hi,
                           double step, long precision_bits) {
  if (!(step > 0) || !(hi > lo)) throw InvalidArgument("rate_interval: need lo < hi and step > 0");
  auto ok = [&](double r) { return rate(BigFloat(r, precision_bits)).admissible; };
  RateInterval out;
  double first = 0, last = 0;
  int steps = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
  for (int i = 0; i <= steps; ++i) {
    double r = lo + i * step;
    if (r <= 0) continue;
    if (ok(r)) {
      if (!out.found) first = r;
      out.found = true;
      last = r;
    }
  }
  if (!out.found) return out;
  auto bisect = [&](double in, double out_pt) {
    for (int i = 0; i < 60; ++i) {
      double mid = 0.5 * (in + out_pt);
      if (ok(mid)) in = mid; else out_pt = mid;
    }
    return 0.5 * (in + out_pt);
  };
  out.lo = first - step > 0 && !ok(first - step) ? bisect(first, first - step) : first;
  out.hi = !ok(last + step) ? bisect(last, last + step) : last;
  return out;
}

RateInterval rate_interval_s2(double lo, double hi, double step, long precision_bits) {
  return rate_interval(rate_s2, lo, hi, step, precision_bits);
}

}  // namespace zeta_rpa
