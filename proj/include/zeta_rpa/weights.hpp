#pragma once

#include <memory>
#include <vector>

#include "zeta_rpa/bigfloat.hpp"
#include "zeta_rpa/quadrature.hpp"

namespace zeta_rpa {

/// Closed forms for s in {2, 3, 4}:
///   w_2 = pi x^2 / sinh^2(pi x)
///   w_3 = pi^2 x^3 cosh(pi x) / sinh^3(pi x)
///   w_4 = (pi^3/3) x^4 (2 + cosh(2 pi x)) / sinh^4(pi x)
BigFloat w_closed(int s, const BigFloat& x);

/// w_s(x) = (2 x^s / Gamma(s)) sum_{k>=1} (2 pi k)^{s-1} e^{-2 pi k x}.
/// Holds the per-s tables; reuse one instance across many x.
class WeightSeries {
 public:
  WeightSeries(const BigRational& s, long precision_bits);

  BigFloat operator()(const BigFloat& x) const;
  /// S(c) = sum_{k>=1} k^{s-1} e^{-c k}.
  BigFloat kernel_sum(const BigFloat& c) const;

  const BigRational& s() const { return s_; }

 private:
  BigFloat direct_sum(const BigFloat& c) const;
  BigFloat euler_maclaurin_sum(const BigFloat& c) const;

  BigRational s_;
  long prec_;
  BigFloat sf_;
  BigFloat two_pi_;
  BigFloat prefactor_;  // 2 (2 pi)^{s-1} / Gamma(s)
  BigFloat c_direct_min_;
  int k_em_;
  std::vector<BigFloat> powers_;   // k^{s-1} for the direct sum
  std::vector<BigFloat> alpha_;    // C(s-1, l) K^{s-1-l}
  std::vector<BigFloat> bern_;     // B_{2j} / (2j)
  BigFloat gamma_s_;
};

BigFloat w_series(const BigRational& s, const BigFloat& x, const QuadratureConfig& cfg);

/// The defining double integral
///   2 (-1)^m x^s / (Gamma(s) Gamma(m+1-s)) int_x^inf (t-x)^{m-s} D^m[1/(e^{2 pi t}-1)] dt
/// with integer m > s - 1. Throws InvalidM otherwise.
BigFloat w_nested(const BigRational& s, int m, const BigFloat& x, const QuadratureConfig& cfg);

struct CheckResult {
  BigFloat value;
  BigFloat reference;
  BigFloat abs_error;
};

/// a^{1-s} (1/(s-1) + 1/(2a) + int_0^inf w_s(x)/(a^2+x^2) dx) against the oracle.
CheckResult theorem1_check(const BigRational& s, const BigRational& a, const QuadratureConfig& cfg);

/// int_0^inf x^k w_s(x) dx against (-1)^{k/2} B_{k+2} (s)_{k+1} / (k+2)!, k even.
CheckResult bernoulli_moment_check(const BigRational& s, int k, const QuadratureConfig& cfg);

/// Hermite's integral for zeta(s, a), valid for all s != 1.
BigFloat hermite_zeta(const BigRational& s, const BigRational& a, const QuadratureConfig& cfg);

/// Both sides of
///   (1/(Gamma(s)Gamma(1-s))) int_0^t x^s (t-x)^{-s}/(1+x^2) dx = (1+t^2)^{-s/2} sin(s atan t)
/// for 0 < s < 1.
std::pair<BigFloat, BigFloat> is_identity_check(const BigRational& s, const BigFloat& t, const QuadratureConfig& cfg);

/// The zeta(2), zeta(3), zeta(4) integral identities; `which` in {2, 3, 4}.
BigFloat zeta_integral_identity(int which, const QuadratureConfig& cfg);

enum class AxisKind { S2, S3 };

struct AxisIntegral {
  BigFloat re;
  BigFloat im;
  BigFloat magnitude;
};

/// s2: int_R P_n(iy) P_m(iy) w_2(y) dy.
/// s3: int_R Pi_n(iy) Pi_m(iy) y^2 w_3(y)/3 dy.
AxisIntegral imaginary_axis_orthogonality(AxisKind kind, int n, int m, const QuadratureConfig& cfg);

}  // namespace zeta_rpa
