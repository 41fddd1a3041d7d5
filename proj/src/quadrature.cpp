#include "zeta_rpa/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zeta_rpa/errors.hpp"

namespace zeta_rpa {

double QuadratureConfig::truncation_x() const {
  return std::max(30.0, static_cast<double>(working_bits() + 16) * std::log(2.0) / (2.0 * M_PI) + 8.0);
}

namespace {

struct PanelResult {
  BigFloat value;
  BigFloat l1;
};

// Tanh-sinh on [p0, p1]; offset is added to the left distance passed to f so
// that panels of a longer range still report the distance to its start.
PanelResult tanh_sinh(const Integrand& f, const BigFloat& p0, const BigFloat& p1, const BigFloat& offset,
                      const QuadratureConfig& cfg) {
  long prec = cfg.working_bits();
  BigFloat half = (p1 - p0) / 2L;
  BigFloat mid = (p0 + p1) / 2L;
  BigFloat pi_half = const_pi(prec) / 2L;
  double umax = std::asinh(static_cast<double>(prec + 40) * std::log(2.0) / M_PI) + 0.5;

  auto node = [&](const BigFloat& u, BigFloat& sum, BigFloat& l1) {
    BigFloat v = pi_half * sinh(u);
    BigFloat e2 = exp(ldexp(v, 1));  // e^{2v}
    // 1 + tanh v = 2 e^{2v}/(1 + e^{2v}), 1 - tanh v = 2/(1 + e^{2v})
    BigFloat denom = e2 + 1L;
    BigFloat da = ldexp(half * e2 / denom, 1);
    BigFloat db = ldexp(half / denom, 1);
    if (!(da.sign() > 0) || !(db.sign() > 0)) return;
    BigFloat x = p0 + da;
    // weight: half * (pi/2) cosh u / cosh^2 v, with 1/cosh^2 v = 4 e^{2v}/(1+e^{2v})^2
    BigFloat w = half * pi_half * cosh(u) * ldexp(e2 / (denom * denom), 2);
    if (w.sign() == 0) return;
    BigFloat fx = f(x, da + offset, db);
    if (!fx.is_finite()) throw QuadratureFailure("integrand is not finite at x = " + x.to_string(20));
    BigFloat t = fx * w;
    sum += t;
    l1 += abs(t);
  };

  BigFloat sum(prec);
  BigFloat l1(prec);
  double h = 0.5;
  {
    BigFloat zero(prec);
    node(zero, sum, l1);
    for (int k = 1; k * h <= umax; ++k) {
      BigFloat u(k * h, prec);
      node(u, sum, l1);
      node(-u, sum, l1);
    }
  }
  BigFloat estimate = sum * BigFloat(h, prec);
  BigFloat tol = ldexp(BigFloat(1L, prec), -cfg.precision_bits - 4);
  for (int level = 2; level <= cfg.max_level; ++level) {
    h /= 2;
    for (int k = 1; k * h <= umax; k += 2) {
      BigFloat u(k * h, prec);
      node(u, sum, l1);
      node(-u, sum, l1);
    }
    BigFloat next = sum * BigFloat(h, prec);
    BigFloat scale = l1 * BigFloat(h, prec);
    BigFloat diff = abs(next - estimate);
    estimate = next;
    if (level >= 4 && diff <= tol * scale) return {estimate, scale};
  }
  throw QuadratureFailure("tanh-sinh did not converge within " + std::to_string(cfg.max_level) + " levels");
}

}  // namespace

BigFloat integrate(const Integrand& f, const BigFloat& a, const BigFloat& b, const QuadratureConfig& cfg) {
  long prec = cfg.working_bits();
  if (a == b) return BigFloat(prec);
  if (b < a) return -integrate(f, b, a, cfg);
  return tanh_sinh(f, a, b, BigFloat(prec), cfg).value;
}

BigFloat integrate_half_line(const HalfLineIntegrand& f, const BigFloat& a, const QuadratureConfig& cfg) {
  long prec = cfg.working_bits();
  Integrand g = [&f](const BigFloat& x, const BigFloat& da, const BigFloat&) { return f(x, da); };
  double limit = cfg.truncation_x();
  BigFloat total(prec);
  BigFloat lo(0L, prec);
  double width = 1.0;
  int panel = 0;
  while (lo.to_double() < limit) {
    BigFloat hi = lo + BigFloat(width, prec);
    total += tanh_sinh(g, a + lo, a + hi, lo, cfg).value;
    lo = hi;
    if (++panel >= 2) width *= 2;
  }
  return total;
}

}  // namespace zeta_rpa
