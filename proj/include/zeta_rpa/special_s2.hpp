#pragma once

#include <functional>
#include <utility>

#include "zeta_rpa/bigfloat.hpp"
#include "zeta_rpa/pade.hpp"

namespace zeta_rpa {

enum class OrthRoute { BinomialSum, Recurrence, Determinant };

/// P_m(x) = sum_k C(m+1,k+1) C(m+k+2,k+1) C(x-1,k); P_0 = 2, P_m(1) = (m+1)(m+2).
PolyQ p_m_s2(int m, OrthRoute route = OrthRoute::BinomialSum);

/// <x^2 c^(2), x^j> = (-1)^j B_{j+2}.
BigRational raw_moment_s2(int j);
MomentFunctional functional_s2();

/// <x^2 c^(2), C(x-1,k)> = (-1)^k (k+1) (k+1)! / (k+3)!.
BigRational modified_moment_s2(int k);
/// <x^2 c^(2), C(x-1,k) C(x-1,j)>.
BigRational modified_pair_moment_s2(int k, int j);
/// e_k = C(x-1,k) / ((k+1)(k+1)!), with <x^2 c^(2), e_k e_j> = (-1)^{k+j}/(k+j+3)!.
PolyQ basis_e_s2(int k);

/// R_{m-1}(t) = <x^2 c^(2), (P_m(x) - P_m(t))/(x - t)>.
PolyQ r_m_s2(int m);
/// The same polynomial from the Newton-basis double sum.
PolyQ r_m_s2_newton(int m);

/// [m+1/m] of Psi(2, t) assembled as 1 + t/2 + t R_{m-1}(1/t)/P_m(1/t).
PadeApprox<BigRational> pade_closed_s2(int m);

struct ApproxPairS2 {
  int n = 0;
  int m = 0;
  BigRational a;
  BigRational epsilon;  // R_{m-1}(n+a)/P_m(n+a)
  BigRational value;    // v/u
  BigRational u;
  BigRational v;
};

/// value = sum_{k<n} (k+a)^{-2} + 1/(n+a) + 1/(2(n+a)^2) + epsilon/(n+a)^2.
/// u = M P_m(n+a), v = u * value, where M is the least common multiple of
/// num(n+a)^2 and D/gcd(D, d_{m+2}^2) with D the denominator of the explicit
/// head. For integer n+a this reduces integrality of d_{m+2}^2 v to that of
/// d_{m+2}^2 R_{m-1}(n+a).
ApproxPairS2 zeta2_approx(int n, int m, const BigRational& a);

/// epsilon from the explicit binomial double sum, independent of r_m_s2.
BigRational epsilon_s2_binomial(int n, int m, const BigRational& a);

/// (d_{m+2}^2 u_{n,m}(1), d_{m+2}^2 v_{n,m}(1)); IntegralityViolation if not integral.
std::pair<BigInt, BigInt> integrality_s2(int n, int m);

/// 2 (m+1)(m+2) / (pi (2m+3) P_m(n+1)^2).
BigFloat error_bound_s2(int n, int m, long precision_bits);

/// |zeta(2) d_{n+2}^2 u_{n,n}(1) - d_{n+2}^2 v_{n,n}(1)|.
BigFloat linear_form_s2(int n, long precision_bits);

struct RateReport {
  BigFloat r;
  BigFloat root;         // sigma(r) for s = 2, mu(r) for s = 3
  BigFloat rate;         // rho(r) or eta(r)
  BigFloat contraction;  // e^{s max(r,1)} / rate
  bool admissible = false;
};

RateReport rate_s2(const BigFloat& r);

struct RateInterval {
  bool found = false;
  double lo = 0;
  double hi = 0;
};

/// Scans [lo, hi] with `step`, then bisects both edges of the admissible set.
RateInterval rate_interval(const std::function<RateReport(const BigFloat&)>& rate, double lo, double hi,
                           double step, long precision_bits);
RateInterval rate_interval_s2(double lo, double hi, double step, long precision_bits);

}  // namespace zeta_rpa
