#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zeta_rpa {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }
inline bool is_integer(const BigRational& x) { return x.get_den() == 1; }

/// "p/q", or "p" when q = 1.
std::string to_string(const BigRational& x);
std::string to_string(const BigInt& x);

/// Accepts "p", "p/q" and plain decimals such as "-2.75"; the decimal form is
/// converted exactly. Exponent notation is rejected.
BigRational parse_rational(std::string_view text);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);

/// Generalized binomial C(top, k) = top (top-1) ... (top-k+1) / k! for any
/// rational top; zero for k < 0.
BigRational binomial(const BigRational& top, long k);

}  // namespace zeta_rpa
