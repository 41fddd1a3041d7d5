#pragma once

#include "zeta_rpa/numbers.hpp"
#include "zeta_rpa/poly.hpp"
#include "zeta_rpa/ratfunc.hpp"

namespace zeta_rpa {

/// B_k with B_1 = -1/2. Memoized; safe to call from several threads.
BigRational bernoulli(int k);

/// (base)_k for k >= -1, with (base)_{-1} = 1/(base - 1).
/// Throws PoleAtOne for k = -1 and base = 1.
BigRational pochhammer(const BigRational& base, int k);
RatFunc pochhammer(const RatFunc& base, int k);

/// d_k = lcm(1, ..., k). Memoized.
BigInt lcm_upto(int k);

/// x -> C(x + shift, k) expanded in the monomial basis.
PolyQ binom_poly(int shift, int k);

}  // namespace zeta_rpa
