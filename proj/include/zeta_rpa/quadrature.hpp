#pragma once

#include <functional>

#include "zeta_rpa/bigfloat.hpp"

namespace zeta_rpa {

struct QuadratureConfig {
  long precision_bits = 128;
  /// Extra working bits carried by nodes and integrands.
  long guard_bits = 32;
  /// Refinement cap; step h = 2^{-level}.
  int max_level = 12;

  long working_bits() const { return precision_bits + guard_bits; }
  /// Upper limit replacing infinity for integrands decaying like e^{-2 pi x}.
  double truncation_x() const;
};

/// Integrand on [a, b]. Besides x it receives x - a and b - x computed without
/// cancellation, so endpoint singularities can be evaluated accurately.
using Integrand = std::function<BigFloat(const BigFloat& x, const BigFloat& dist_a, const BigFloat& dist_b)>;

/// Integrand on [a, infinity); receives x and x - a.
using HalfLineIntegrand = std::function<BigFloat(const BigFloat& x, const BigFloat& dist_a)>;

/// Double-exponential (tanh-sinh) quadrature on a finite interval. Throws
/// QuadratureFailure if successive levels do not agree to the requested
/// precision relative to the integral of |f|.
BigFloat integrate(const Integrand& f, const BigFloat& a, const BigFloat& b, const QuadratureConfig& cfg);

/// Integral over [a, infinity) for integrands with exponential decay: geometric
/// panels [a, a+1], [a+1, a+2], [a+2, a+4], ... up to cfg.truncation_x().
BigFloat integrate_half_line(const HalfLineIntegrand& f, const BigFloat& a, const QuadratureConfig& cfg);

}  // namespace zeta_rpa
