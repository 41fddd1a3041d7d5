#include "zeta_rpa/poly.hpp"

namespace zeta_rpa {

PolyQ primitive_part(const PolyQ& p) {
  if (p.is_zero()) return {};
  BigInt den_lcm = 1;
  for (const BigRational& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  BigInt content = 0;
  for (const BigRational& c : p.coeffs()) {
    BigInt v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  BigRational scale(den_lcm, content);
  scale.canonicalize();
  if (sgn(p.leading()) < 0) scale = -scale;
  return p * scale;
}

std::string to_string(const PolyQ& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    BigRational c = p.coeff(i);
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    BigRational mag = neg ? BigRational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (!unit || i == 0) out += to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace zeta_rpa
