#include "zeta_rpa/psi_rpa.hpp"

#include "zeta_rpa/exact_core.hpp"
#include "zeta_rpa/oracle.hpp"

namespace zeta_rpa {

BigRational psi_coeff(int k, const BigRational& s) {
  if (k < 0) throw InvalidArgument("psi_coeff: negative index");
  BigRational b = bernoulli(k);
  if (k > 0 && sgn(b) == 0) return 0;
  BigRational r = b * pochhammer(s, k - 1) / BigRational(factorial(static_cast<unsigned long>(k)));
  if (k % 2 == 1) r = -r;
  return r;
}

RatFunc psi_coeff_symbolic(int k) {
  if (k < 0) throw InvalidArgument("psi_coeff: negative index");
  BigRational b = bernoulli(k);
  if (k > 0 && sgn(b) == 0) return RatFunc();
  BigRational scale = b / BigRational(factorial(static_cast<unsigned long>(k)));
  if (k % 2 == 1) scale = -scale;
  return pochhammer(RatFunc::s(), k - 1) * RatFunc(scale);
}

std::vector<BigRational> psi_series(const BigRational& s, int count) {
  std::vector<BigRational> c;
  c.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) c.push_back(psi_coeff(k, s));
  return c;
}

std::vector<RatFunc> psi_series_symbolic(int count) {
  std::vector<RatFunc> c;
  c.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) c.push_back(psi_coeff_symbolic(k));
  return c;
}

std::vector<BigRational> psi2_series(const BigRational& s, int count) {
  std::vector<BigRational> c;
  for (int k = 0; k < count; ++k) c.push_back(psi_coeff(k + 2, s));
  return c;
}

std::vector<RatFunc> psi2_series_symbolic(int count) {
  std::vector<RatFunc> c;
  for (int k = 0; k < count; ++k) c.push_back(psi_coeff_symbolic(k + 2));
  return c;
}

RpaSymbolic rpa_symbolic(int n, const BigInt& a, int m1, int m2) {
  if (n < 0 || a <= 0) throw InvalidArgument("rpa_symbolic: need n >= 0 and a > 0");
  RpaSymbolic r;
  r.n = n;
  r.a = a;
  r.m1 = m1;
  r.m2 = m2;
  r.base = a + n;
  for (int k = 0; k < n; ++k) r.term_bases.push_back(BigInt(a + k));
  PadeApprox<RatFunc> pa = pade(psi_series_symbolic(m1 + m2 + 1), m1, m2);
  RatFunc t(BigRational(BigInt(1), r.base));
  r.ratfunc = pa.eval(t);
  return r;
}

RpaNumeric rpa_numeric(const BigRational& s, const BigRational& a, int n, int m1, int m2, long precision_bits) {
  if (sgn(a) <= 0 || n < 0) throw InvalidArgument("rpa_numeric: need a > 0 and n >= 0");
  if (s == 1) throw PoleAtOne("rpa_numeric: s = 1");
  long prec = precision_bits + 32;
  RpaNumeric r;
  r.n = n;
  r.m1 = m1;
  r.m2 = m2;
  r.s = s;
  r.a = a;
  BigRational base = a + n;
  BigRational t = 1 / base;
  PadeApprox<BigRational> pa = pade(psi_series(s, m1 + m2 + 1), m1, m2);
  BigRational d = eval_q(pa.den, t);
  if (sgn(d) == 0) throw ZeroDenominator("rpa_numeric: Pade denominator vanishes at t");
  r.pade_value = eval_q(pa.num, t) / d;
  BigFloat sf(s, prec);
  BigFloat partial(prec);
  for (int k = 0; k < n; ++k) {
    BigRational kb = a + k;
    partial += pow(BigFloat(kb, prec), -sf);
  }
  r.partial_sum = partial;
  BigFloat factor = pow(BigFloat(base, prec), BigFloat(BigRational(1 - s), prec));
  r.total = partial + factor * BigFloat(r.pade_value, prec);
  return r;
}

BigRational rpa_exact(int s, const BigRational& a, int n, int m1, int m2) {
  if (s < 2) throw InvalidArgument("rpa_exact: integer s >= 2 required");
  BigRational base = a + n;
  BigRational t = 1 / base;
  PadeApprox<BigRational> pa = pade(psi_series(BigRational(s), m1 + m2 + 1), m1, m2);
  BigRational d = eval_q(pa.den, t);
  if (sgn(d) == 0) throw ZeroDenominator("rpa_exact: Pade denominator vanishes at t");
  BigRational total = eval_q(pa.num, t) / d;
  BigRational tp = 1;
  for (int i = 0; i < s - 1; ++i) tp *= t;
  total *= tp;
  for (int k = 0; k < n; ++k) {
    BigRational kb = a + k;
    BigRational term = 1;
    for (int i = 0; i < s; ++i) term /= kb;
    total += term;
  }
  return total;
}

namespace {

template <class F>
bool split_check(const std::vector<F>& full, const std::vector<F>& tail, int m, int p) {
  PadeApprox<F> lhs = pade(full, m + p, m);
  PadeApprox<F> inner = pade(tail, m + p - 2, m);
  PadeApprox<F> rhs;
  rhs.m1 = m + p;
  rhs.m2 = m;
  rhs.den = inner.den;
  rhs.num = Poly<F>({full[0], full[1]}) * inner.den + inner.num.shifted(2);
  return same_rational_function(lhs, rhs);
}

}  // namespace

bool psi2_split_check(int m, int p, const std::optional<BigRational>& s) {
  if (m < 0 || p < 1 || m + p < 2) throw InvalidArgument("psi2_split_check: need p >= 1 and m + p >= 2");
  int count = 2 * m + p + 1;
  if (s) return split_check(psi_series(*s, count), psi2_series(*s, count - 2), m, p);
  return split_check(psi_series_symbolic(count), psi2_series_symbolic(count - 2), m, p);
}

std::vector<ConvergenceRow> convergence_table(const BigRational& s, const BigRational& a, int n, int p, int m_max,
                                              long precision_bits) {
  if (p < 0 || m_max < 1) throw InvalidArgument("convergence_table: need p >= 0 and m_max >= 1");
  BigFloat oracle = zeta_ref(s, a, precision_bits + 32);
  std::vector<ConvergenceRow> rows;
  for (int m = 1; m <= m_max; ++m) {
    RpaNumeric r = rpa_numeric(s, a, n, m + p, m, precision_bits);
    rows.push_back({m, r.total, abs(r.total - oracle)});
  }
  return rows;
}

}  // namespace zeta_rpa
