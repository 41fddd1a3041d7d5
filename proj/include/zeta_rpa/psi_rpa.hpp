#pragma once

#include <optional>
#include <vector>

#include "zeta_rpa/bigfloat.hpp"
#include "zeta_rpa/pade.hpp"
#include "zeta_rpa/ratfunc.hpp"

namespace zeta_rpa {

/// Taylor coefficient c_k(s) = (-1)^k B_k (s)_{k-1} / k! of the remainder
/// kernel Psi(s, t). Throws PoleAtOne for k = 0, s = 1.
BigRational psi_coeff(int k, const BigRational& s);
RatFunc psi_coeff_symbolic(int k);

std::vector<BigRational> psi_series(const BigRational& s, int count);
std::vector<RatFunc> psi_series_symbolic(int count);

/// Psi_2 = (Psi - c_0 - c_1 t) / t^2, coefficients c_{k+2}.
std::vector<BigRational> psi2_series(const BigRational& s, int count);
std::vector<RatFunc> psi2_series_symbolic(int count);

/// Symbolic RPA for integer a: sum_{k<n} (k+a)^{-s} + (n+a)^{1-s} F(s).
/// The power terms stay unevaluated; F is canonical in Q(s).
struct RpaSymbolic {
  int n = 0;
  BigInt a = 1;
  int m1 = 0;
  int m2 = 0;
  BigInt base = 1;                 // n + a
  std::vector<BigInt> term_bases;  // k + a for k < n
  RatFunc ratfunc;
};

RpaSymbolic rpa_symbolic(int n, const BigInt& a, int m1, int m2);

/// Numeric RPA. The Pade stage is exact over Q; only the powers are floating.
struct RpaNumeric {
  int n = 0;
  int m1 = 0;
  int m2 = 0;
  BigRational s;
  BigRational a;
  BigRational pade_value;  // [m1/m2]_{Psi(s,.)}(1/(n+a))
  BigFloat partial_sum;
  BigFloat total;
};

RpaNumeric rpa_numeric(const BigRational& s, const BigRational& a, int n, int m1, int m2, long precision_bits);

/// Fully exact RPA value for integer s >= 2 (all powers are rational).
BigRational rpa_exact(int s, const BigRational& a, int n, int m1, int m2);

/// Checks [m+p/m]_Psi = c_0 + c_1 t + t^2 [m+p-2/m]_{Psi_2} exactly; symbolic
/// in s when s is empty.
bool psi2_split_check(int m, int p, const std::optional<BigRational>& s);

struct ConvergenceRow {
  int m = 0;
  BigFloat value;
  BigFloat abs_error;
};

/// RPA(n, m+p, m) for m = 1..m_max against the reference oracle.
std::vector<ConvergenceRow> convergence_table(const BigRational& s, const BigRational& a, int n, int p, int m_max,
                                              long precision_bits);

}  // namespace zeta_rpa
