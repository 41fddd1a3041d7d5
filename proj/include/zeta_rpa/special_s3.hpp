#pragma once

#include <utility>
#include <vector>

#include "zeta_rpa/special_s2.hpp"

namespace zeta_rpa {

/// Pi_m(x) = sum_k C(m+1,k+1) C(m+k+2,k+1) C(x-1,k) C(x+k,k)/(k+1), even of
/// degree 2m; Pi_0 = 2, Pi_m(1) = (m+1)(m+2).
PolyQ pi_m_s3(int m, OrthRoute route = OrthRoute::BinomialSum);

/// <x^4 c^(3), x^j> = (-1)^j B_{j+4} (3)_{j+3} / (j+4)!.
BigRational raw_moment_s3(int j);
MomentFunctional functional_s3();

/// <x^4 c^(3), C(x-1,k) C(x+k,k)> = (-1)^{k+1} (k+1)^2 / (2(k+3)(k+2)).
BigRational moment_s3(int k);
/// <x^4 c^(3), theta_k theta_j> = 1/(2(k+j+3)) - 1/(2(k+j+2)).
BigRational moment_s3_pair(int k, int j);
/// <x^4 c^(3), nu_i>.
BigRational nu_moment_s3(int i);

/// Newton basis on 0, 1, -1, 2, -2, ...:
/// nu_{2j} = C(x-1,j) C(x+j,j), nu_{2j+1} = C(x-1,j+1) C(x+j,j).
PolyQ nu_s3(int i);
/// theta_k = (-1)^k C(x-1,k) C(x+k,k) / (k+1)^2.
PolyQ theta_basis_s3(int k);

/// Theta_{m-1}(t) = <x^4 c^(3), (Pi_m(x) - Pi_m(t))/(x - t)>. Odd, degree 2m-1.
PolyQ theta_m_s3(int m);
/// The same polynomial from the compact double sum over nu-quotients.
PolyQ theta_m_s3_compact(int m);

/// sum_k C(m+1,k+1) C(m+k+2,k) (-1)^k theta_k(x); proportional to Pi_m.
PolyQ jacobi_connection_s3(int m);

/// [2m+2/2m] of Psi(3, t) assembled as 1/2 + t/2 + t^2/4 + t^3 Theta_{m-1}(1/t)/Pi_m(1/t).
PadeApprox<BigRational> pade_closed_s3(int m);

struct ApproxPairS3 {
  int n = 0;
  int m = 0;
  BigRational a;
  BigRational epsilon;  // Theta_{m-1}(n+a)/Pi_m(n+a)
  BigRational value;    // f/g
  BigRational f;
  BigRational g;
};

/// value = sum_{k<n} (k+a)^{-3} + 1/(2N^2) + 1/(2N^3) + 1/(4N^4) + epsilon/N^5,
/// N = n+a. g = M Pi_m(N), f = g * value, with M the lcm of num(N)^5 and
/// D/gcd(D, d_{m+1}^3), D the denominator of the explicit head.
ApproxPairS3 zeta3_approx(int n, int m, const BigRational& a);

/// epsilon from the explicit binomial double sum, independent of theta_m_s3.
BigRational epsilon_s3_binomial(int n, int m, const BigRational& a);

/// (d_{m+1}^3 g_{n,m}(1), d_{m+1}^3 f_{n,m}(1)); IntegralityViolation if not integral.
std::pair<BigInt, BigInt> integrality_s3(int n, int m);

/// (m+1)(m+2) / (3 (2m+3) Pi_m(n+1)^2).
BigFloat error_bound_s3(int n, int m, long precision_bits);

/// |zeta(3) d_{n+1}^3 g_{n,n}(1) - d_{n+1}^3 f_{n,n}(1)|.
BigFloat linear_form_s3(int n, long precision_bits);

RateReport rate_s3(const BigFloat& r);
RateInterval rate_interval_s3(double lo, double hi, double step, long precision_bits);

/// Apery's sequences from (n+1)^3 x_{n+1} = (34n^3+51n^2+27n+5) x_n - n^3 x_{n-1}:
/// b starts 1, 5 and a starts 0, 6.
std::vector<BigInt> apery_b(int count);
std::vector<BigRational> apery_a(int count);

struct AperyRow {
  int m = 0;
  BigRational value;       // RPA(m, 2m-1, 2m) for zeta(3), a = 1
  BigInt q;                // primitive integer reversed Pade denominator at N = m+1
  BigRational p;           // q * value
  BigInt apery_b;
  bool value_matches = false;  // value == a_m / b_m
  BigRational q_over_b;        // q / b_m
  BigFloat linear_form;        // |zeta(3) q - p|
  BigFloat apery_linear_form;  // |zeta(3) b_m - a_m|
  BigFloat rate;               // linear_form^{1/m}
};

std::vector<AperyRow> apery_crosscheck(int m_max, long precision_bits);

}  // namespace zeta_rpa
