#pragma once

#include <functional>
#include <vector>

#include "zeta_rpa/errors.hpp"
#include "zeta_rpa/linalg.hpp"
#include "zeta_rpa/poly.hpp"

namespace zeta_rpa {

/// [m1/m2] approximant: den(0) = 1, den * f - num = O(t^contact_order).
template <class F>
struct PadeApprox {
  int m1 = 0;
  int m2 = 0;
  Poly<F> num;
  Poly<F> den;
  int contact_order = 0;

  template <class X>
  X eval(const X& t) const {
    X d = den.template eval<X>(t);
    if (detail::coeff_is_zero(d)) throw ZeroDenominator("Pade denominator vanishes");
    return num.template eval<X>(t) / d;
  }
};

/// First power of t whose coefficient in den * f - num is nonzero, or
/// series.size() if all checked coefficients vanish.
template <class F>
int verify_contact(const std::vector<F>& series, const PadeApprox<F>& pa) {
  int len = static_cast<int>(series.size());
  for (int k = 0; k < len; ++k) {
    F acc = F(0) - pa.num.coeff(k);
    for (int j = 0; j <= std::min(k, pa.den.degree()); ++j) {
      acc = acc + pa.den.coeff(j) * series[static_cast<std::size_t>(k - j)];
    }
    if (!detail::coeff_is_zero(acc)) return k;
  }
  return len;
}

/// Hankel-system construction of [m1/m2] from c_0..c_{m1+m2} (extra
/// coefficients only enlarge the contact check).
template <class F>
PadeApprox<F> pade(const std::vector<F>& series, int m1, int m2) {
  if (m1 < 0 || m2 < 0) throw InvalidArgument("pade: negative degree");
  if (static_cast<int>(series.size()) < m1 + m2 + 1) {
    throw InsufficientCoefficients("pade: need m1 + m2 + 1 coefficients");
  }
  auto c = [&](int i) { return i < 0 ? F(0) : series[static_cast<std::size_t>(i)]; };
  std::vector<F> q(static_cast<std::size_t>(m2) + 1, F(0));
  q[0] = F(1);
  if (m2 > 0) {
    Matrix<F> a(static_cast<std::size_t>(m2), std::vector<F>(static_cast<std::size_t>(m2), F(0)));
    std::vector<F> b(static_cast<std::size_t>(m2), F(0));
    for (int i = 1; i <= m2; ++i) {
      for (int j = 1; j <= m2; ++j) a[i - 1][j - 1] = c(m1 + i - j);
      b[i - 1] = F(0) - c(m1 + i);
    }
    std::vector<F> sol;
    try {
      sol = solve(std::move(a), b);
    } catch (const ZeroDeterminant&) {
      throw DegenerateTable("pade: singular Hankel system for [" + std::to_string(m1) + "/" +
                            std::to_string(m2) + "]");
    }
    for (int j = 1; j <= m2; ++j) q[static_cast<std::size_t>(j)] = sol[static_cast<std::size_t>(j - 1)];
  }
  std::vector<F> p(static_cast<std::size_t>(m1) + 1, F(0));
  for (int i = 0; i <= m1; ++i) {
    F acc = F(0);
    for (int j = 0; j <= std::min(i, m2); ++j) acc = acc + q[static_cast<std::size_t>(j)] * c(i - j);
    p[static_cast<std::size_t>(i)] = acc;
  }
  PadeApprox<F> pa;
  pa.m1 = m1;
  pa.m2 = m2;
  pa.num = Poly<F>(std::move(p));
  pa.den = Poly<F>(std::move(q));
  pa.contact_order = verify_contact(series, pa);
  return pa;
}

/// [m2+p/m2] via the shift route: explicit head c_0 + ... + c_p t^p plus
/// t^{p+1} [m2-1/m2] of the tail series c_{p+1}, c_{p+2}, ...
template <class F>
PadeApprox<F> pade_shifted(const std::vector<F>& series, int m2, int p) {
  if (m2 < 1 || p < 0) throw InvalidArgument("pade_shifted: need m2 >= 1, p >= 0");
  if (static_cast<int>(series.size()) < 2 * m2 + p + 1) {
    throw InsufficientCoefficients("pade_shifted: need 2 m2 + p + 1 coefficients");
  }
  std::vector<F> tail(series.begin() + p + 1, series.end());
  PadeApprox<F> inner = pade(tail, m2 - 1, m2);
  Poly<F> head(std::vector<F>(series.begin(), series.begin() + p + 1));
  PadeApprox<F> pa;
  pa.m1 = m2 + p;
  pa.m2 = m2;
  pa.den = inner.den;
  pa.num = head * inner.den + inner.num.shifted(p + 1);
  pa.contact_order = verify_contact(series, pa);
  return pa;
}

/// a.num / a.den == b.num / b.den as rational functions.
template <class F>
bool same_rational_function(const PadeApprox<F>& a, const PadeApprox<F>& b) {
  return a.num * b.den == b.num * a.den;
}

/// Linear functional on Q[x] given by its moments <c, x^j>.
struct MomentFunctional {
  std::function<BigRational(int)> moment;

  BigRational apply(const PolyQ& p) const;
};

/// Normalization of an orthogonal polynomial: either P(point) = value or
/// leading coefficient = value.
struct Normalization {
  enum class Kind { ValueAt, Leading };
  Kind kind = Kind::Leading;
  BigRational point = 0;
  BigRational value = 1;

  static Normalization value_at(const BigRational& x, const BigRational& v) {
    return {Kind::ValueAt, x, v};
  }
  static Normalization leading(const BigRational& v) { return {Kind::Leading, 0, v}; }
};

/// Degree-n orthogonal polynomial from the bordered moment determinant
/// det[<c, e_i e_j>]_{i<n, j<=n} with last row e_0(x) .. e_n(x).
/// Throws ZeroDeterminant when the leading n x n minor vanishes.
PolyQ orth_poly_determinant(const MomentFunctional& fun, const std::vector<PolyQ>& basis, int n,
                            const Normalization& norm);

/// R(t) = <c, (P(x) - P(t)) / (x - t)>, the functional acting on x.
PolyQ associated_poly(const MomentFunctional& fun, const PolyQ& p);

}  // namespace zeta_rpa
