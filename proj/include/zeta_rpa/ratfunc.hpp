#pragma once

#include <string>

#include "zeta_rpa/poly.hpp"

namespace zeta_rpa {

/// Element of the field Q(s), kept in canonical form: num/den coprime and
/// den monic. Zero is 0/1. Equality of canonical forms is field equality.
class RatFunc {
 public:
  RatFunc() : den_(PolyQ::constant(1)) {}
  RatFunc(int v) : num_(PolyQ::constant(BigRational(v))), den_(PolyQ::constant(1)) {}
  RatFunc(const BigRational& v) : num_(PolyQ::constant(v)), den_(PolyQ::constant(1)) {}
  explicit RatFunc(PolyQ num) : num_(std::move(num)), den_(PolyQ::constant(1)) {}
  /// Normalizes; throws ZeroDenominator when den is the zero polynomial.
  RatFunc(PolyQ num, PolyQ den);

  /// The indeterminate s.
  static RatFunc s() { return RatFunc(PolyQ::x()); }

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Substitutes a rational value of s; ZeroDenominator at a pole.
  BigRational eval(const BigRational& s) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  PolyQ num_;
  PolyQ den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

/// Canonical form of num/den (reduced, monic denominator).
RatFunc ratfunc_normalize(const PolyQ& num, const PolyQ& den);

/// "(num)/(den)" in the variable s.
std::string to_string(const RatFunc& f);

}  // namespace zeta_rpa
