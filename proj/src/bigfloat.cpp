#include "zeta_rpa/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

namespace zeta_rpa {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

long pmax(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

template <class Fn>
BigFloat unary(const BigFloat& x, Fn fn) {
  BigFloat r(x.precision());
  fn(r.raw(), x.raw(), kRnd);
  return r;
}

}  // namespace

BigFloat::BigFloat(long prec_bits) {
  mpfr_init2(v_, std::max<long>(prec_bits, MPFR_PREC_MIN));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long prec_bits) : BigFloat(prec_bits) { mpfr_set_si(v_, value, kRnd); }

BigFloat::BigFloat(double value, long prec_bits) : BigFloat(prec_bits) { mpfr_set_d(v_, value, kRnd); }

BigFloat::BigFloat(const BigInt& value, long prec_bits) : BigFloat(prec_bits) {
  mpfr_set_z(v_, value.get_mpz_t(), kRnd);
}

BigFloat::BigFloat(const BigRational& value, long prec_bits) : BigFloat(prec_bits) {
  mpfr_set_q(v_, value.get_mpq_t(), kRnd);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, kRnd);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // mpfr_t is an array type holding a pointer to limbs; steal it.
  *v_ = *other.v_;
  moved_ = other.moved_;
  other.moved_ = true;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    std::swap(*v_, *other.v_);
    std::swap(moved_, other.moved_);
  }
  return *this;
}

BigFloat::~BigFloat() {
  if (!moved_) mpfr_clear(v_);
}

std::string BigFloat::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
  mpfr_asprintf(&buf, fmt.c_str(), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), kRnd);
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), kRnd);
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), kRnd);
  mpfr_mul(v_, v_, o.v_, kRnd);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), kRnd);
  mpfr_div(v_, v_, o.v_, kRnd);
  return *this;
}
BigFloat& BigFloat::operator+=(long o) {
  mpfr_add_si(v_, v_, o, kRnd);
  return *this;
}
BigFloat& BigFloat::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, kRnd);
  return *this;
}
BigFloat& BigFloat::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, kRnd);
  return *this;
}
BigFloat& BigFloat::operator/=(long o) {
  mpfr_div_si(v_, v_, o, kRnd);
  return *this;
}

BigFloat operator-(const BigFloat& a) { return unary(a, mpfr_neg); }

#define ZETA_RPA_BINOP(op, fn)                                  \
  BigFloat operator op(const BigFloat& a, const BigFloat& b) {  \
    BigFloat r(pmax(a, b));                                     \
    fn(r.raw(), a.raw(), b.raw(), kRnd);                        \
    return r;                                                   \
  }
ZETA_RPA_BINOP(+, mpfr_add)
ZETA_RPA_BINOP(-, mpfr_sub)
ZETA_RPA_BINOP(*, mpfr_mul)
ZETA_RPA_BINOP(/, mpfr_div)
#undef ZETA_RPA_BINOP

BigFloat operator+(const BigFloat& a, long b) { BigFloat r(a); r += b; return r; }
BigFloat operator-(const BigFloat& a, long b) { BigFloat r(a); r -= b; return r; }
BigFloat operator*(const BigFloat& a, long b) { BigFloat r(a); r *= b; return r; }
BigFloat operator/(const BigFloat& a, long b) { BigFloat r(a); r /= b; return r; }
BigFloat operator+(long a, const BigFloat& b) { return b + a; }
BigFloat operator-(long a, const BigFloat& b) {
  BigFloat r(b.precision());
  mpfr_si_sub(r.raw(), a, b.raw(), kRnd);
  return r;
}
BigFloat operator*(long a, const BigFloat& b) { return b * a; }
BigFloat operator/(long a, const BigFloat& b) {
  BigFloat r(b.precision());
  mpfr_si_div(r.raw(), a, b.raw(), kRnd);
  return r;
}

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>=(const BigFloat& a, const BigFloat& b) {
  return mpfr_greaterequal_p(a.raw(), b.raw()) != 0;
}
bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator<(const BigFloat& a, double b) { return mpfr_cmp_d(a.raw(), b) < 0; }
bool operator>(const BigFloat& a, double b) { return mpfr_cmp_d(a.raw(), b) > 0; }

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat expm1(const BigFloat& x) { return unary(x, mpfr_expm1); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat atan(const BigFloat& x) { return unary(x, mpfr_atan); }
BigFloat sinh(const BigFloat& x) { return unary(x, mpfr_sinh); }
BigFloat cosh(const BigFloat& x) { return unary(x, mpfr_cosh); }
BigFloat tanh(const BigFloat& x) { return unary(x, mpfr_tanh); }
BigFloat gamma(const BigFloat& x) { return unary(x, mpfr_gamma); }

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(pmax(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), kRnd);
  return r;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), n, kRnd);
  return r;
}

BigFloat gamma_inc(const BigFloat& a, const BigFloat& x) {
  BigFloat r(pmax(a, x));
  mpfr_gamma_inc(r.raw(), a.raw(), x.raw(), kRnd);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.raw(), x.raw(), e, kRnd);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat const_pi(long prec_bits) {
  BigFloat r(prec_bits);
  mpfr_const_pi(r.raw(), kRnd);
  return r;
}

BigFloat const_log2(long prec_bits) {
  BigFloat r(prec_bits);
  mpfr_const_log2(r.raw(), kRnd);
  return r;
}

BigFloat mpfr_zeta_value(const BigFloat& s) { return unary(s, mpfr_zeta); }

BigFloat eval_poly(const PolyQ& p, const BigFloat& x) {
  BigFloat r(x.precision());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    r *= x;
    r += BigFloat(*it, x.precision());
  }
  return r;
}

BigFloat rel_error(const BigFloat& a, const BigFloat& b) {
  BigFloat d = abs(a - b);
  if (b.sign() == 0) return d;
  return d / abs(b);
}

}  // namespace zeta_rpa
