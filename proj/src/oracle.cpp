#include "zeta_rpa/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "zeta_rpa/exact_core.hpp"
#include "zeta_rpa/weights.hpp"

namespace zeta_rpa {

namespace {

BigFloat euler_maclaurin(const BigRational& s, const BigRational& a, long precision_bits) {
  if (s <= 1) throw InvalidArgument("Euler-Maclaurin oracle needs s > 1");
  long prec = precision_bits + 40;
  BigFloat sf(s, prec);
  double sd = s.get_d();
  long n = std::max<long>(precision_bits, static_cast<long>(2 * std::ceil(std::fabs(sd))));
  BigFloat sum(prec);
  for (long k = 0; k < n; ++k) {
    BigRational b = a + k;
    sum += pow(BigFloat(b, prec), -sf);
  }
  BigRational nb = a + n;
  BigFloat x(nb, prec);
  BigFloat x_pow = pow(x, -sf);  // (N+a)^{-s}
  sum += x_pow * x / (sf - 1L);
  sum += x_pow / 2L;
  // B_{2j} (s)_{2j-1} x^{-s-2j+1} / (2j)!, built incrementally.
  BigFloat budget = ldexp(BigFloat(1L, prec), -precision_bits - 8);
  BigFloat poch = sf;             // (s)_1
  BigFloat xp = x_pow / x;        // x^{-s-1}
  BigFloat inv_x2 = 1L / (x * x);
  BigFloat fact(2L, prec);        // (2j)!
  BigFloat prev_mag(prec);
  for (int j = 1; j < 400; ++j) {
    BigFloat term = BigFloat(bernoulli(2 * j), prec) * poch * xp / fact;
    BigFloat mag = abs(term);
    if (j > 1 && mag > prev_mag) throw SlowConvergence("Euler-Maclaurin tail started diverging");
    sum += term;
    if (mag < budget) return sum;
    prev_mag = mag;
    poch *= (sf + static_cast<long>(2 * j - 1)) * (sf + static_cast<long>(2 * j));
    xp *= inv_x2;
    fact *= static_cast<long>((2 * j + 1) * (2 * j + 2));
  }
  throw SlowConvergence("Euler-Maclaurin tail did not reach the budget");
}

}  // namespace

BigFloat zeta_ref(const BigRational& s, const BigRational& a, long precision_bits, OracleMethod method) {
  if (s == 1) throw PoleAtOne("zeta(s, a) has a pole at s = 1");
  if (sgn(a) <= 0) throw InvalidArgument("zeta_ref: a must be positive");
  if (method == OracleMethod::Auto) method = s > 1 ? OracleMethod::EulerMaclaurin : OracleMethod::Hermite;
  if (method == OracleMethod::EulerMaclaurin) return euler_maclaurin(s, a, precision_bits);
  QuadratureConfig cfg;
  cfg.precision_bits = precision_bits + 8;
  return hermite_zeta(s, a, cfg);
}

BigFloat zeta_constant(const std::string& name, long precision_bits) {
  if (name == "pi") return const_pi(precision_bits);
  if (name == "zeta2") {
    BigFloat pi = const_pi(precision_bits + 8);
    return pi * pi / 6L;
  }
  if (name == "zeta3") return zeta_ref(3, 1, precision_bits);
  throw InvalidArgument("unknown constant '" + name + "'");
}

}  // namespace zeta_rpa
