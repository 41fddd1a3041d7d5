#include "zeta_rpa/weights.hpp"

#include <cmath>

#include "zeta_rpa/exact_core.hpp"
#include "zeta_rpa/oracle.hpp"
#include "zeta_rpa/special_s3.hpp"

namespace zeta_rpa {

namespace {

constexpr int kDirectTerms = 3000;

BigFloat pow_rational(const BigFloat& x, const BigRational& e) {
  if (e == 0) return BigFloat(1L, x.precision());
  if (e.get_den() == 1 && e.get_num().fits_slong_p()) return pow(x, e.get_num().get_si());
  return pow(x, BigFloat(e, x.precision()));
}

// Weight for the fast paths: closed form where available, otherwise series.
class Weight {
 public:
  Weight(const BigRational& s, long prec) : s_(s) {
    if (s == 2 || s == 3 || s == 4) {
      closed_ = static_cast<int>(s.get_num().get_si());
    } else {
      series_ = std::make_unique<WeightSeries>(s, prec);
    }
  }
  BigFloat operator()(const BigFloat& x) const { return closed_ ? w_closed(closed_, x) : (*series_)(x); }

 private:
  BigRational s_;
  int closed_ = 0;
  std::unique_ptr<WeightSeries> series_;
};

}  // namespace

BigFloat w_closed(int s, const BigFloat& x) {
  if (!(x.sign() > 0)) throw InvalidArgument("w_closed: x must be positive");
  long prec = x.precision();
  BigFloat pi = const_pi(prec);
  BigFloat px = pi * x;
  BigFloat sh = sinh(px);
  switch (s) {
    case 2:
      return pi * x * x / (sh * sh);
    case 3:
      return pi * pi * pow(x, 3L) * cosh(px) / pow(sh, 3L);
    case 4:
      return pi * pi * pi / 3L * pow(x, 4L) * (2L + cosh(ldexp(px, 1))) / pow(sh, 4L);
    default:
      throw InvalidArgument("w_closed: s must be 2, 3 or 4");
  }
}

WeightSeries::WeightSeries(const BigRational& s, long precision_bits)
    : s_(s), prec_(precision_bits + 32), sf_(s, prec_), two_pi_(ldexp(const_pi(prec_), 1)) {
  if (sgn(s) <= 0) throw InvalidArgument("w_series: s must be positive");
  gamma_s_ = gamma(sf_);
  BigRational sm1 = s - 1;
  prefactor_ = 2L * pow_rational(two_pi_, sm1) / gamma_s_;
  double ln2 = std::log(2.0);
  c_direct_min_ = BigFloat((static_cast<double>(prec_ + 16) * ln2 + 40.0) / kDirectTerms, prec_);
  k_em_ = static_cast<int>(std::ceil(static_cast<double>(prec_ + 40) * ln2 / (2 * M_PI))) + 8;
  powers_.reserve(kDirectTerms + 1);
  powers_.emplace_back(prec_);  // index 0 unused
  for (int k = 1; k <= kDirectTerms; ++k) powers_.push_back(pow_rational(BigFloat(static_cast<long>(k), prec_), sm1));
  // Taylor coefficients of (K + h)^{s-1}: alpha_l = C(s-1, l) K^{s-1-l}.
  int jmax = static_cast<int>(3 * k_em_);
  BigFloat kk(static_cast<long>(k_em_), prec_);
  BigFloat sm1f(sm1, prec_);
  BigFloat alpha = powers_[static_cast<std::size_t>(k_em_)];
  for (int l = 0; l <= 2 * jmax; ++l) {
    alpha_.push_back(alpha);
    alpha = alpha * (sm1f - static_cast<long>(l)) / (static_cast<long>(l + 1) * kk);
  }
  for (int j = 1; j <= jmax; ++j) {
    bern_.push_back(BigFloat(bernoulli(2 * j), prec_) / static_cast<long>(2 * j));
  }
}

BigFloat WeightSeries::direct_sum(const BigFloat& c) const {
  BigFloat r = exp(-c);
  BigFloat rk = r;
  BigFloat sum(prec_);
  BigFloat tiny = ldexp(BigFloat(1L, prec_), -prec_ - 8);
  double peak = (sf_.to_double() - 1.0) / c.to_double();
  for (int k = 1; k <= kDirectTerms; ++k) {
    BigFloat term = powers_[static_cast<std::size_t>(k)] * rk;
    sum += term;
    if (k > peak && abs(term) <= tiny * abs(sum)) return sum;
    rk *= r;
  }
  return euler_maclaurin_sum(c);
}

BigFloat WeightSeries::euler_maclaurin_sum(const BigFloat& c) const {
  // sum_{k>=1} g(k), g(k) = k^{s-1} e^{-ck}:
  //   sum_{k<K} g(k) + int_K^inf g + g(K)/2 - sum_j B_{2j}/(2j)! g^{(2j-1)}(K)
  int kk = k_em_;
  BigFloat r = exp(-c);
  BigFloat rk = r;
  BigFloat head(prec_);
  for (int k = 1; k < kk; ++k) {
    head += powers_[static_cast<std::size_t>(k)] * rk;
    rk *= r;
  }
  BigFloat ck = c * static_cast<long>(kk);
  BigFloat integral = gamma_inc(sf_, ck) / pow(c, sf_);
  // g^{(n)}(K)/n! = e^{-cK} sum_l alpha_l (-c)^{n-l}/(n-l)!
  std::size_t nmax = alpha_.size();
  std::vector<BigFloat> beta;
  beta.reserve(nmax);
  BigFloat b(1L, prec_);
  for (std::size_t i = 0; i < nmax; ++i) {
    beta.push_back(b);
    b = b * (-c) / static_cast<long>(i + 1);
  }
  BigFloat corr = alpha_[0] / 2L;
  BigFloat tiny = ldexp(BigFloat(1L, prec_), -prec_ - 8);
  BigFloat scale = abs(alpha_[0]);
  bool converged = false;
  for (std::size_t j = 1; j <= bern_.size(); ++j) {
    std::size_t n = 2 * j - 1;
    BigFloat gn(prec_);
    for (std::size_t l = 0; l <= n; ++l) gn += alpha_[l] * beta[n - l];
    // B_{2j}/(2j)! * g^{(2j-1)} = B_{2j}/(2j) * g^{(2j-1)}/(2j-1)!
    BigFloat term = bern_[j - 1] * gn;
    corr -= term;
    if (j >= 3 && abs(term) <= tiny * scale) {
      converged = true;
      break;
    }
  }
  if (!converged) throw SlowConvergence("Euler-Maclaurin correction for w_s did not converge");
  return head + integral + exp(-ck) * corr;
}

BigFloat WeightSeries::kernel_sum(const BigFloat& c) const {
  BigFloat cw(c);
  if (cw.precision() < prec_) mpfr_prec_round(cw.raw(), prec_, MPFR_RNDN);
  if (cw >= c_direct_min_) return direct_sum(cw);
  return euler_maclaurin_sum(cw);
}

BigFloat WeightSeries::operator()(const BigFloat& x) const {
  if (!(x.sign() > 0)) throw InvalidArgument("w_series: x must be positive");
  BigFloat xw(x);
  if (xw.precision() < prec_) mpfr_prec_round(xw.raw(), prec_, MPFR_RNDN);
  BigFloat sum = kernel_sum(two_pi_ * xw);
  BigFloat out = prefactor_ * pow(xw, sf_) * sum;
  if (out.precision() > x.precision()) mpfr_prec_round(out.raw(), x.precision(), MPFR_RNDN);
  return out;
}

BigFloat w_series(const BigRational& s, const BigFloat& x, const QuadratureConfig& cfg) {
  WeightSeries w(s, cfg.working_bits());
  return w(x);
}

BigFloat w_nested(const BigRational& s, int m, const BigFloat& x, const QuadratureConfig& cfg) {
  if (sgn(s) <= 0) throw InvalidArgument("w_nested: s must be positive");
  if (BigRational(m) <= s - 1) throw InvalidM("w_nested: m must exceed s - 1");
  if (!(x.sign() > 0)) throw InvalidArgument("w_nested: x must be positive");
  long prec = cfg.working_bits();
  BigFloat xw(x);
  if (xw.precision() < prec) mpfr_prec_round(xw.raw(), prec, MPFR_RNDN);
  BigFloat sf(s, prec);
  BigFloat two_pi = ldexp(const_pi(prec), 1);
  BigFloat tiny = ldexp(BigFloat(1L, prec), -prec - 8);
  BigRational expo = 2 * (m - s) + 1;  // t = x + v^2 turns (t-x)^{m-s} dt into 2 v^{2(m-s)+1} dv
  // D^m[1/(e^{2 pi t} - 1)] = (-2 pi)^m sum_k k^m e^{-2 pi k t}; the (-1)^m cancels.
  HalfLineIntegrand f = [&](const BigFloat& v, const BigFloat&) {
    BigFloat t = xw + v * v;
    BigFloat r = exp(-(two_pi * t));
    BigFloat rk = r;
    BigFloat sum(prec);
    double peak = m / (2 * M_PI * t.to_double());
    for (long k = 1;; ++k) {
      BigFloat term = pow(BigFloat(k, prec), static_cast<long>(m)) * rk;
      sum += term;
      if (k > peak && abs(term) <= tiny * abs(sum)) break;
      if (k > 1000000) throw SlowConvergence("w_nested: derivative series needs more than 10^6 terms");
      rk *= r;
    }
    return ldexp(pow_rational(v, expo) * sum, 1);
  };
  BigFloat integral = integrate_half_line(f, BigFloat(prec), cfg);
  BigFloat coef = 2L * pow(xw, sf) * pow(two_pi, static_cast<long>(m)) /
                  (gamma(sf) * gamma(BigFloat(BigRational(m + 1 - s), prec)));
  BigFloat out = coef * integral;
  mpfr_prec_round(out.raw(), x.precision(), MPFR_RNDN);
  return out;
}

CheckResult theorem1_check(const BigRational& s, const BigRational& a, const QuadratureConfig& cfg) {
  if (s == 1) throw PoleAtOne("theorem1_check: s = 1");
  if (sgn(a) <= 0) throw InvalidArgument("theorem1_check: a must be positive");
  long prec = cfg.working_bits();
  Weight w(s, prec);
  BigFloat af(a, prec);
  BigFloat a2 = af * af;
  HalfLineIntegrand f = [&](const BigFloat& x, const BigFloat&) { return w(x) / (a2 + x * x); };
  BigFloat integral = integrate_half_line(f, BigFloat(prec), cfg);
  BigFloat sf(s, prec);
  BigFloat rhs = pow(af, BigFloat(BigRational(1 - s), prec)) * (1L / (sf - 1L) + 1L / (2L * af) + integral);
  BigFloat ref = zeta_ref(s, a, cfg.precision_bits + 16);
  return {rhs, ref, abs(rhs - ref)};
}

CheckResult bernoulli_moment_check(const BigRational& s, int k, const QuadratureConfig& cfg) {
  if (k < 0 || k % 2 != 0) throw InvalidArgument("bernoulli_moment_check: k must be even and >= 0");
  long prec = cfg.working_bits();
  Weight w(s, prec);
  HalfLineIntegrand f = [&](const BigFloat& x, const BigFloat&) { return pow(x, static_cast<long>(k)) * w(x); };
  BigFloat integral = integrate_half_line(f, BigFloat(prec), cfg);
  BigRational target = bernoulli(k + 2) * pochhammer(s, k + 1) / BigRational(factorial(static_cast<unsigned long>(k + 2)));
  if ((k / 2) % 2 == 1) target = -target;
  BigFloat ref(target, prec);
  return {integral, ref, abs(integral - ref)};
}

BigFloat hermite_zeta(const BigRational& s, const BigRational& a, const QuadratureConfig& cfg) {
  if (s == 1) throw PoleAtOne("hermite_zeta: s = 1");
  if (sgn(a) <= 0) throw InvalidArgument("hermite_zeta: a must be positive");
  long prec = cfg.working_bits();
  BigFloat af(a, prec);
  BigFloat sf(s, prec);
  BigFloat a2 = af * af;
  BigFloat half_s = sf / 2L;
  BigFloat two_pi = ldexp(const_pi(prec), 1);
  HalfLineIntegrand f = [&](const BigFloat& y, const BigFloat&) {
    BigFloat mag = pow(a2 + y * y, -half_s);
    return mag * sin(sf * atan(y / af)) / expm1(two_pi * y);
  };
  BigFloat integral = integrate_half_line(f, BigFloat(prec), cfg);
  BigFloat out = pow(af, -sf) / 2L + pow(af, 1L - sf) / (sf - 1L) + ldexp(integral, 1);
  mpfr_prec_round(out.raw(), cfg.precision_bits, MPFR_RNDN);
  return out;
}

std::pair<BigFloat, BigFloat> is_identity_check(const BigRational& s, const BigFloat& t, const QuadratureConfig& cfg) {
  if (sgn(s) <= 0 || s >= 1) throw InvalidArgument("is_identity_check: need 0 < s < 1");
  if (t.sign() < 0) throw InvalidArgument("is_identity_check: t must be >= 0");
  long prec = cfg.working_bits();
  BigFloat tw(t);
  if (tw.precision() < prec) mpfr_prec_round(tw.raw(), prec, MPFR_RNDN);
  BigFloat sf(s, prec);
  BigFloat rhs = pow(1L + tw * tw, -sf / 2L) * sin(sf * atan(tw));
  if (tw.sign() == 0) return {BigFloat(prec), rhs};
  Integrand f = [&](const BigFloat& x, const BigFloat& da, const BigFloat& db) {
    return pow(da, sf) * pow(db, -sf) / (1L + x * x);
  };
  BigFloat integral = integrate(f, BigFloat(prec), tw, cfg);
  BigFloat lhs = integral / (gamma(sf) * gamma(1L - sf));
  return {lhs, rhs};
}

BigFloat zeta_integral_identity(int which, const QuadratureConfig& cfg) {
  long prec = cfg.working_bits();
  BigFloat two_pi = ldexp(const_pi(prec), 1);
  HalfLineIntegrand f;
  BigFloat base(prec);
  long coef = 0;
  switch (which) {
    case 2:
      base = BigFloat(BigRational(3, 2), prec);
      coef = 4;
      f = [&](const BigFloat& x, const BigFloat&) {
        BigFloat q = 1L + x * x;
        return x / (q * q * expm1(two_pi * x));
      };
      break;
    case 3:
      base = BigFloat(1L, prec);
      coef = -2;
      f = [&](const BigFloat& x, const BigFloat&) {
        BigFloat q = 1L + x * x;
        return x * (x * x - 3L) / (q * q * q * expm1(two_pi * x));
      };
      break;
    case 4:
      base = BigFloat(BigRational(5, 6), prec);
      coef = -8;
      f = [&](const BigFloat& x, const BigFloat&) {
        BigFloat q = 1L + x * x;
        BigFloat q2 = q * q;
        return x * (x * x - 1L) / (q2 * q2 * expm1(two_pi * x));
      };
      break;
    default:
      throw InvalidArgument("zeta_integral_identity: which must be 2, 3 or 4");
  }
  return base + integrate_half_line(f, BigFloat(prec), cfg) * coef;
}

AxisIntegral imaginary_axis_orthogonality(AxisKind kind, int n, int m, const QuadratureConfig& cfg) {
  if (n < 0 || m < 0) throw InvalidArgument("imaginary_axis_orthogonality: negative degree");
  long prec = cfg.working_bits();
  PolyQ pn = kind == AxisKind::S2 ? p_m_s2(n) : pi_m_s3(n);
  PolyQ pm = kind == AxisKind::S2 ? p_m_s2(m) : pi_m_s3(m);
  // P(iy) = A(y) + i B(y) with A, B real polynomials.
  auto split = [](const PolyQ& p) {
    std::vector<BigRational> re(static_cast<std::size_t>(p.degree() + 1)), im(re.size());
    for (int j = 0; j <= p.degree(); ++j) {
      BigRational c = p.coeff(j);
      switch (j % 4) {
        case 0: re[static_cast<std::size_t>(j)] = c; break;
        case 1: im[static_cast<std::size_t>(j)] = c; break;
        case 2: re[static_cast<std::size_t>(j)] = -c; break;
        default: im[static_cast<std::size_t>(j)] = -c; break;
      }
    }
    return std::make_pair(PolyQ(std::move(re)), PolyQ(std::move(im)));
  };
  auto [an, bn] = split(pn);
  auto [am, bm] = split(pm);
  PolyQ re = an * am - bn * bm;
  PolyQ im = an * bm + bn * am;
  // The weights are even in y: int_R Q w = int_0^inf (Q(y) + Q(-y)) w(y) dy.
  auto even_part = [](const PolyQ& q) {
    std::vector<BigRational> c(static_cast<std::size_t>(q.degree() + 1));
    for (int j = 0; j <= q.degree(); j += 2) c[static_cast<std::size_t>(j)] = 2 * q.coeff(j);
    return PolyQ(std::move(c));
  };
  PolyQ re2 = even_part(re);
  PolyQ im2 = even_part(im);
  if (kind == AxisKind::S3) {
    // weight y^2 w_3(y) / 3
    re2 = re2.shifted(2) * BigRational(1, 3);
    im2 = im2.shifted(2) * BigRational(1, 3);
  }
  int ws = kind == AxisKind::S2 ? 2 : 3;
  auto integral_of = [&](const PolyQ& q) {
    if (q.is_zero()) return BigFloat(prec);
    HalfLineIntegrand f = [&](const BigFloat& y, const BigFloat&) { return eval_poly(q, y) * w_closed(ws, y); };
    return integrate_half_line(f, BigFloat(prec), cfg);
  };
  AxisIntegral out;
  out.re = integral_of(re2);
  out.im = integral_of(im2);
  out.magnitude = sqrt(out.re * out.re + out.im * out.im);
  return out;
}

}  // namespace zeta_rpa
