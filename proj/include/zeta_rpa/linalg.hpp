#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zeta_rpa/errors.hpp"
#include "zeta_rpa/poly.hpp"

namespace zeta_rpa {

template <class F>
using Matrix = std::vector<std::vector<F>>;

namespace detail {

// Fraction-free (Bareiss) elimination in place on the first `cols` columns,
// with row pivoting on nonzero entries. Returns the sign of the permutation,
// or 0 if the matrix is singular.
template <class F>
int bareiss_eliminate(Matrix<F>& a, std::size_t n) {
  int sign = 1;
  F prev = F(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && coeff_is_zero(a[piv][k])) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < a[i].size(); ++j) {
        F v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = v / prev;
      }
      a[i][k] = F(0);
    }
    prev = a[k][k];
  }
  return sign;
}

}  // namespace detail

/// Determinant by fraction-free elimination.
template <class F>
F determinant(Matrix<F> a) {
  std::size_t n = a.size();
  if (n == 0) return F(1);
  int sign = detail::bareiss_eliminate(a, n);
  if (sign == 0) return F(0);
  F d = a[n - 1][n - 1];
  return sign > 0 ? d : F(0) - d;
}

/// Solves a x = b exactly. Throws ZeroDeterminant when a is singular.
template <class F>
std::vector<F> solve(Matrix<F> a, const std::vector<F>& b) {
  std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  if (detail::bareiss_eliminate(a, n) == 0) throw ZeroDeterminant("singular linear system");
  std::vector<F> x(n, F(0));
  for (std::size_t ii = n; ii-- > 0;) {
    F acc = a[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc = acc - a[ii][j] * x[j];
    x[ii] = acc / a[ii][ii];
  }
  return x;
}

}  // namespace zeta_rpa
