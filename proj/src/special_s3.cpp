#include "zeta_rpa/special_s3.hpp"

#include "zeta_rpa/exact_core.hpp"
#include "zeta_rpa/oracle.hpp"
#include "zeta_rpa/psi_rpa.hpp"

namespace zeta_rpa {

namespace {

PolyQ pi_binomial(int m) {
  PolyQ p;
  for (int k = 0; k <= m; ++k) {
    BigRational w(binomial(m + 1, k + 1) * binomial(m + k + 2, k + 1), BigInt(k + 1));
    w.canonicalize();
    p += binom_poly(-1, k) * binom_poly(k, k) * w;
  }
  return p;
}

PolyQ pi_recurrence(int m) {
  PolyQ prev;
  PolyQ cur = PolyQ::constant(2);
  for (int j = 0; j < m; ++j) {
    BigRational c2(BigInt(2 * (2 * j + 3)), BigInt((j + 1) * (j + 2) * (j + 2)));
    BigRational c0(BigInt(2 * j + 3), BigInt(j + 2));
    BigRational cp(BigInt(j + 1), BigInt(j + 2));
    c2.canonicalize();
    c0.canonicalize();
    cp.canonicalize();
    PolyQ next = cur * PolyQ{c0, BigRational(0), c2} - prev * cp;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigRational head_s3(int n, const BigRational& a) {
  BigRational h = 0;
  for (int k = 0; k < n; ++k) {
    BigRational b = a + k;
    h += 1 / (b * b * b);
  }
  BigRational nn = a + n;
  BigRational n2 = nn * nn;
  h += 1 / (2 * n2);
  h += 1 / (2 * n2 * nn);
  h += 1 / (4 * n2 * n2);
  return h;
}

BigInt pow_int(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

PolyQ pi_m_s3(int m, OrthRoute route) {
  if (m < 0) throw InvalidArgument("pi_m_s3: m must be >= 0");
  switch (route) {
    case OrthRoute::BinomialSum:
      return pi_binomial(m);
    case OrthRoute::Recurrence:
      return pi_recurrence(m);
    case OrthRoute::Determinant: {
      // Odd moments vanish, so Pi_m(x) = Q(x^2) with Q orthogonal for the
      // functional y^j -> <x^4 c^(3), x^{2j}>.
      MomentFunctional even{[](int j) { return raw_moment_s3(2 * j); }};
      std::vector<PolyQ> basis;
      for (int j = 0; j <= m; ++j) basis.push_back(PolyQ::monomial(1, j));
      BigRational at_one(BigInt((m + 1) * (m + 2)));
      PolyQ q = orth_poly_determinant(even, basis, m, Normalization::value_at(1, at_one));
      return q.compose(PolyQ::monomial(1, 2));
    }
  }
  throw InvalidArgument("pi_m_s3: unknown route");
}

BigRational raw_moment_s3(int j) { return psi_coeff(j + 4, 3); }

MomentFunctional functional_s3() { return MomentFunctional{raw_moment_s3}; }

BigRational moment_s3(int k) {
  BigRational r(BigInt((k + 1) * (k + 1)), BigInt(2 * (k + 3) * (k + 2)));
  r.canonicalize();
  return k % 2 == 1 ? r : BigRational(-r);
}

BigRational moment_s3_pair(int k, int j) {
  BigRational a(1, 2 * (k + j + 3));
  BigRational b(1, 2 * (k + j + 2));
  a.canonicalize();
  b.canonicalize();
  return a - b;
}

BigRational nu_moment_s3(int i) {
  int j = i / 2;
  BigRational r(BigInt((j + 1) * (j + 1)), BigInt(2 * (j + 3) * (j + 2)));
  r.canonicalize();
  if (j % 2 == 1) r = -r;
  return i % 2 == 1 ? r : BigRational(-r);
}

PolyQ nu_s3(int i) {
  int j = i / 2;
  if (i % 2 == 0) return binom_poly(-1, j) * binom_poly(j, j);
  return binom_poly(-1, j + 1) * binom_poly(j, j);
}

PolyQ theta_basis_s3(int k) {
  BigRational c(BigInt(k % 2 == 0 ? 1 : -1), BigInt((k + 1) * (k + 1)));
  c.canonicalize();
  return binom_poly(-1, k) * binom_poly(k, k) * c;
}

PolyQ theta_m_s3(int m) {
  if (m < 1) throw InvalidArgument("theta_m_s3: m must be >= 1");
  return associated_poly(functional_s3(), pi_m_s3(m));
}

PolyQ theta_m_s3_compact(int m) {
  if (m < 1) throw InvalidArgument("theta_m_s3_compact: m must be >= 1");
  // nu_{2k}(t) / (C(t-1,p) C(t+p,p)) = C(t-1-p, k-p) C(t+k, k-p) / C(k,p)^2
  PolyQ r;
  for (int k = 1; k <= m; ++k) {
    BigRational w(binomial(m + 1, k + 1) * binomial(m + k + 2, k + 1), BigInt(k + 1));
    w.canonicalize();
    PolyQ inner;
    for (int p = 1; p <= k; ++p) {
      BigInt ck = binomial(k, p);
      BigRational c(BigInt(p % 2 == 0 ? 1 : -1), ck * ck * BigInt(2 * (p + 1) * (p + 2)));
      c.canonicalize();
      inner += binom_poly(-1 - p, k - p) * binom_poly(k, k - p) * c;
    }
    r += inner * w;
  }
  return r.shifted(1);
}

PolyQ jacobi_connection_s3(int m) {
  PolyQ r;
  for (int k = 0; k <= m; ++k) {
    BigRational w(binomial(m + 1, k + 1) * binomial(m + k + 2, k));
    if (k % 2 == 1) w = -w;
    r += theta_basis_s3(k) * w;
  }
  return r;
}

PadeApprox<BigRational> pade_closed_s3(int m) {
  if (m < 1) throw InvalidArgument("pade_closed_s3: m must be >= 1");
  PolyQ den = pi_m_s3(m).reversed(2 * m);
  PolyQ th = theta_m_s3(m);
  PolyQ head{BigRational(1, 2), BigRational(1, 2), BigRational(1, 4)};
  PolyQ num = head * den + th.reversed(2 * m - 1).shifted(4);
  BigRational lead = den.coeff(0);
  PadeApprox<BigRational> pa;
  pa.m1 = 2 * m + 2;
  pa.m2 = 2 * m;
  pa.num = num / lead;
  pa.den = den / lead;
  pa.contact_order = verify_contact(psi_series(3, 4 * m + 5), pa);
  return pa;
}

ApproxPairS3 zeta3_approx(int n, int m, const BigRational& a) {
  if (n < 0 || m < 0 || sgn(a) <= 0) throw InvalidArgument("zeta3_approx: need n >= 0, m >= 0, a > 0");
  ApproxPairS3 r;
  r.n = n;
  r.m = m;
  r.a = a;
  BigRational nn = a + n;
  BigRational pn = eval_q(pi_m_s3(m), nn);
  if (sgn(pn) == 0) throw ZeroDenominator("zeta3_approx: Pi_m vanishes at n + a");
  r.epsilon = m == 0 ? BigRational(0) : BigRational(eval_q(theta_m_s3(m), nn) / pn);
  BigRational head = head_s3(n, a);
  BigRational n5 = nn * nn * nn * nn * nn;
  r.value = head + r.epsilon / n5;
  BigInt d = pow_int(lcm_upto(m + 1), 3);
  BigInt dh = head.get_den();
  BigInt g;
  mpz_gcd(g.get_mpz_t(), dh.get_mpz_t(), d.get_mpz_t());
  BigInt mult = pow_int(nn.get_num(), 5);
  BigInt part = dh / g;
  mpz_lcm(mult.get_mpz_t(), mult.get_mpz_t(), part.get_mpz_t());
  r.g = BigRational(mult) * pn;
  r.f = r.g * r.value;
  return r;
}

BigRational epsilon_s3_binomial(int n, int m, const BigRational& a) {
  BigRational nn = a + n;
  BigRational num = 0;
  BigRational den = 0;
  for (int k = 0; k <= m; ++k) {
    BigRational w(binomial(m + 1, k + 1) * binomial(m + k + 2, k + 1), BigInt(k + 1));
    w.canonicalize();
    BigRational inner = 0;
    for (int p = 1; p <= k; ++p) {
      BigRational term = binomial(BigRational(nn - p - 1), k - p) * binomial(BigRational(nn + k), k - p);
      BigInt ck = binomial(k, p);
      term /= BigRational(ck * ck * BigInt(2 * (p + 1) * (p + 2)));
      if (p % 2 == 1) term = -term;
      inner += term;
    }
    num += w * nn * inner;
    den += w * binomial(BigRational(nn - 1), k) * binomial(BigRational(nn + k), k);
  }
  if (sgn(den) == 0) throw ZeroDenominator("epsilon_s3_binomial: vanishing denominator");
  return num / den;
}

std::pair<BigInt, BigInt> integrality_s3(int n, int m) {
  ApproxPairS3 p = zeta3_approx(n, m, 1);
  BigInt d = pow_int(lcm_upto(m + 1), 3);
  BigRational sg = p.g * BigRational(d);
  BigRational sf = p.f * BigRational(d);
  if (!is_integer(sg) || !is_integer(sf)) {
    throw IntegralityViolation("d_{m+1}^3 g or f not integral at n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  return {sg.get_num(), sf.get_num()};
}

BigFloat error_bound_s3(int n, int m, long precision_bits) {
  long prec = precision_bits + 32;
  BigRational pn = eval_q(pi_m_s3(m), BigRational(n + 1));
  BigRational c(BigInt((m + 1) * (m + 2)), BigInt(3 * (2 * m + 3)));
  c.canonicalize();
  BigRational q = c / (pn * pn);
  return BigFloat(q, prec);
}

BigFloat linear_form_s3(int n, long precision_bits) {
  auto [dg, df] = integrality_s3(n, n);
  // the form is tiny next to its terms, so carry their size as guard bits
  long prec = precision_bits + 32 + static_cast<long>(mpz_sizeinbase(dg.get_mpz_t(), 2));
  return abs(zeta_constant("zeta3", prec) * BigFloat(dg, prec) - BigFloat(df, prec));
}

RateReport rate_s3(const BigFloat& r) {
  long prec = r.precision();
  RateReport rep;
  rep.r = r;
  // mu solves (1 - t^2)(r^2 - t^2) = t^4
  rep.root = r / sqrt(1L + r * r);
  const BigFloat& mu = rep.root;
  rep.rate = (1L + mu) * pow(r + mu, r) / ((1L - mu) * pow(r - mu, r));
  BigFloat e = exp(3L * max(r, BigFloat(1L, prec)));
  rep.contraction = e / rep.rate;
  rep.admissible = rep.contraction < BigFloat(1L, prec);
  return rep;
}

RateInterval rate_interval_s3(double lo, double hi, double step, long precision_bits) {
  return rate_interval(rate_s3, lo, hi, step, precision_bits);
}

std::vector<BigInt> apery_b(int count) {
  std::vector<BigInt> b{1, 5};
  for (int n = 1; static_cast<int>(b.size()) < count; ++n) {
    BigInt nn(n);
    BigInt p = 34 * nn * nn * nn + 51 * nn * nn + 27 * nn + 5;
    BigInt next = p * b[static_cast<std::size_t>(n)] - nn * nn * nn * b[static_cast<std::size_t>(n - 1)];
    BigInt d = (nn + 1) * (nn + 1) * (nn + 1);
    if (next % d != 0) throw IntegralityViolation("Apery b recurrence left a remainder");
    b.push_back(next / d);
  }
  b.resize(static_cast<std::size_t>(count));
  return b;
}

std::vector<BigRational> apery_a(int count) {
  std::vector<BigRational> a{BigRational(0), BigRational(6)};
  for (int n = 1; static_cast<int>(a.size()) < count; ++n) {
    BigRational nn(n);
    BigRational p = 34 * nn * nn * nn + 51 * nn * nn + 27 * nn + 5;
    BigRational next = p * a[static_cast<std::size_t>(n)] - nn * nn * nn * a[static_cast<std::size_t>(n - 1)];
    next /= (nn + 1) * (nn + 1) * (nn + 1);
    a.push_back(next);
  }
  a.resize(static_cast<std::size_t>(count));
  return a;
}

std::vector<AperyRow> apery_crosscheck(int m_max, long precision_bits) {
  if (m_max < 1) throw InvalidArgument("apery_crosscheck: m_max must be >= 1");
  long prec = precision_bits + 32;
  BigFloat z3 = zeta_constant("zeta3", prec);
  std::vector<BigInt> b = apery_b(m_max + 1);
  std::vector<BigRational> a = apery_a(m_max + 1);
  std::vector<AperyRow> rows;
  for (int m = 1; m <= m_max; ++m) {
    AperyRow row;
    row.m = m;
    row.value = rpa_exact(3, 1, m, 2 * m - 1, 2 * m);
    PadeApprox<BigRational> pa = pade(psi_series(3, 4 * m), 2 * m - 1, 2 * m);
    PolyQ rev = primitive_part(pa.den.reversed(2 * m));
    BigRational qv = eval_q(rev, BigRational(m + 1));
    row.q = abs(qv.get_num());
    row.p = BigRational(row.q) * row.value;
    row.apery_b = b[static_cast<std::size_t>(m)];
    const BigRational& am = a[static_cast<std::size_t>(m)];
    row.value_matches = row.value == am / BigRational(row.apery_b);
    row.q_over_b = BigRational(row.q, row.apery_b);
    row.q_over_b.canonicalize();
    row.linear_form = abs(z3 * BigFloat(row.q, prec) - BigFloat(row.p, prec));
    row.apery_linear_form = abs(z3 * BigFloat(row.apery_b, prec) - BigFloat(am, prec));
    row.rate = pow(row.linear_form, BigFloat(BigRational(1, m), prec));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace zeta_rpa
