#pragma once

#include <mpfr.h>

#include <string>

#include "zeta_rpa/numbers.hpp"
#include "zeta_rpa/poly.hpp"

namespace zeta_rpa {

/// Owning wrapper around mpfr_t. Every value carries its own precision;
/// binary operations round to the larger precision of the two operands.
class BigFloat {
 public:
  explicit BigFloat(long prec_bits = 128);
  BigFloat(long value, long prec_bits);
  BigFloat(int value, long prec_bits) : BigFloat(static_cast<long>(value), prec_bits) {}
  BigFloat(double value, long prec_bits);
  BigFloat(const BigInt& value, long prec_bits);
  BigFloat(const BigRational& value, long prec_bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Fixed-point-free scientific rendering with `digits` significant digits.
  std::string to_string(int digits = 30) const;

  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat& operator+=(long o);
  BigFloat& operator-=(long o);
  BigFloat& operator*=(long o);
  BigFloat& operator/=(long o);

 private:
  mpfr_t v_;
  bool moved_ = false;
};

BigFloat operator-(const BigFloat& a);
BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator+(const BigFloat& a, long b);
BigFloat operator-(const BigFloat& a, long b);
BigFloat operator*(const BigFloat& a, long b);
BigFloat operator/(const BigFloat& a, long b);
BigFloat operator+(long a, const BigFloat& b);
BigFloat operator-(long a, const BigFloat& b);
BigFloat operator*(long a, const BigFloat& b);
BigFloat operator/(long a, const BigFloat& b);

bool operator<(const BigFloat& a, const BigFloat& b);
bool operator>(const BigFloat& a, const BigFloat& b);
bool operator<=(const BigFloat& a, const BigFloat& b);
bool operator>=(const BigFloat& a, const BigFloat& b);
bool operator==(const BigFloat& a, const BigFloat& b);
bool operator<(const BigFloat& a, double b);
bool operator>(const BigFloat& a, double b);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat expm1(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long n);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat tanh(const BigFloat& x);
BigFloat gamma(const BigFloat& x);
/// Upper incomplete gamma Γ(a, x).
BigFloat gamma_inc(const BigFloat& a, const BigFloat& x);
BigFloat ldexp(const BigFloat& x, long e);
BigFloat max(const BigFloat& a, const BigFloat& b);

BigFloat const_pi(long prec_bits);
BigFloat const_log2(long prec_bits);

/// MPFR's own zeta; only used by tests as an outside reference.
BigFloat mpfr_zeta_value(const BigFloat& s);

/// Horner evaluation of a rational polynomial at a floating point.
BigFloat eval_poly(const PolyQ& p, const BigFloat& x);

/// |a - b| / |b|, or |a - b| when b = 0.
BigFloat rel_error(const BigFloat& a, const BigFloat& b);

}  // namespace zeta_rpa
