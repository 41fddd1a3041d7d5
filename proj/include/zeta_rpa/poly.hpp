#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zeta_rpa/errors.hpp"
#include "zeta_rpa/numbers.hpp"

namespace zeta_rpa {

namespace detail {
// Unqualified call so that is_zero overloads declared after this header are
// found by argument-dependent lookup at instantiation time.
template <class F>
bool coeff_is_zero(const F& v) {
  return is_zero(v);
}
}  // namespace detail

/// Dense univariate polynomial over an exact field F, coefficients in
/// ascending degree. The zero polynomial has no coefficients.
///
/// F needs +, -, *, / and a free `is_zero(const F&)`.
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const F& v) { return Poly(std::vector<F>{v}); }
  static Poly monomial(const F& v, int degree) {
    std::vector<F> c(static_cast<std::size_t>(degree) + 1, F(0));
    c.back() = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }

  F coeff(int i) const {
    if (i < 0 || i > degree()) return F(0);
    return c_[static_cast<std::size_t>(i)];
  }
  F leading() const { return c_.empty() ? F(0) : c_.back(); }

  /// Horner evaluation; X must accept multiplication by X and addition of F.
  template <class X>
  X eval(const X& x) const {
    X r = X(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      r = r * x;
      r = r + X(*it);
    }
    return r;
  }

  /// x^n p(1/x); requires n >= degree().
  Poly reversed(int n) const {
    if (is_zero()) return {};
    if (n < degree()) throw InvalidArgument("reversed: n below degree");
    std::vector<F> c(static_cast<std::size_t>(n) + 1, F(0));
    for (int i = 0; i <= degree(); ++i) c[static_cast<std::size_t>(n - i)] = c_[static_cast<std::size_t>(i)];
    return Poly(std::move(c));
  }

  /// p mod x^n.
  Poly truncated(int n) const {
    std::vector<F> c(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(n, static_cast<std::ptrdiff_t>(c_.size())));
    return Poly(std::move(c));
  }

  /// p * x^k.
  Poly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<F> c(static_cast<std::size_t>(k), F(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(std::move(c));
  }

  Poly derivative() const {
    std::vector<F> c;
    for (int i = 1; i <= degree(); ++i) c.push_back(c_[static_cast<std::size_t>(i)] * F(i));
    return Poly(std::move(c));
  }

  /// p(q(x)).
  Poly compose(const Poly& q) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + constant(*it);
    return r;
  }

  Poly monic() const {
    if (is_zero()) return {};
    return *this * (F(1) / leading());
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<F> c;
    c.reserve(a.c_.size());
    for (const F& v : a.c_) c.push_back(F(0) - v);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const F& k) {
    std::vector<F> c;
    c.reserve(a.c_.size());
    for (const F& v : a.c_) c.push_back(v * k);
    return Poly(std::move(c));
  }
  friend Poly operator*(const F& k, const Poly& a) { return a * k; }
  friend Poly operator/(const Poly& a, const F& k) { return a * (F(1) / k); }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Euclidean division a = q b + r with deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
  std::vector<F> r = a.coeffs();
  int db = b.degree();
  F lead_inv = F(1) / b.leading();
  if (a.degree() < db) return {Poly<F>(), a};
  std::vector<F> q(static_cast<std::size_t>(a.degree() - db) + 1, F(0));
  for (int i = a.degree() - db; i >= 0; --i) {
    F f = r[static_cast<std::size_t>(i + db)] * lead_inv;
    q[static_cast<std::size_t>(i)] = f;
    if (detail::coeff_is_zero(f)) continue;
    for (int j = 0; j <= db; ++j) {
      std::size_t idx = static_cast<std::size_t>(i + j);
      r[idx] = r[idx] - f * b.coeff(j);
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

using PolyQ = Poly<BigRational>;

/// Exact rational evaluation helper (avoids gmpxx expression templates in eval).
inline BigRational eval_q(const PolyQ& p, const BigRational& x) {
  BigRational r = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

/// Polynomial with integer coefficients and content 1, positive leading term,
/// proportional to p. Returns the zero polynomial for p = 0.
PolyQ primitive_part(const PolyQ& p);

/// "3/2*x^2 - x + 1" style rendering, for diagnostics.
std::string to_string(const PolyQ& p, const std::string& var = "x");

}  // namespace zeta_rpa
