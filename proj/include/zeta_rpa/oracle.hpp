#pragma once

#include <string>

#include "zeta_rpa/bigfloat.hpp"

namespace zeta_rpa {

enum class OracleMethod {
  Auto,            // Euler-Maclaurin for s > 1, Hermite integral otherwise
  EulerMaclaurin,  // direct sum plus Euler-Maclaurin tail; s > 1 only
  Hermite,         // Hermite's integral; any s != 1
};

/// Hurwitz zeta(s, a) for a > 0 with absolute error below 2^{-precision_bits}.
/// Computed independently of the Pade machinery. Throws PoleAtOne at s = 1.
BigFloat zeta_ref(const BigRational& s, const BigRational& a, long precision_bits,
                  OracleMethod method = OracleMethod::Auto);

/// "pi", "zeta2" or "zeta3".
BigFloat zeta_constant(const std::string& name, long precision_bits);

}  // namespace zeta_rpa
