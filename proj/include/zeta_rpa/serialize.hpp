#pragma once

#include <json.hpp>

#include "zeta_rpa/pade.hpp"
#include "zeta_rpa/psi_rpa.hpp"
#include "zeta_rpa/ratfunc.hpp"

namespace zeta_rpa {

using Json = nlohmann::ordered_json;

Json to_json(const BigRational& x);
Json to_json(const PolyQ& p);
Json to_json(const RatFunc& f);
Json to_json(const PadeApprox<BigRational>& pa);
Json to_json(const PadeApprox<RatFunc>& pa);
Json to_json(const RpaSymbolic& r);

BigRational rational_from_json(const Json& j);
PolyQ poly_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
PadeApprox<BigRational> pade_q_from_json(const Json& j);
PadeApprox<RatFunc> pade_qs_from_json(const Json& j);
RpaSymbolic rpa_symbolic_from_json(const Json& j);

/// Decimal rendering with `digits` significant digits.
std::string float_string(const BigFloat& x, int digits = 40);

}  // namespace zeta_rpa
