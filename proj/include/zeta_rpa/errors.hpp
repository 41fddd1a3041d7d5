#pragma once

#include <stdexcept>
#include <string>

namespace zeta_rpa {

/// Base class for every failure raised by the library. `code()` is the stable
/// machine-readable name used in CLI error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define ZETA_RPA_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

ZETA_RPA_DEFINE_ERROR(PoleAtOne);
ZETA_RPA_DEFINE_ERROR(ZeroDenominator);
ZETA_RPA_DEFINE_ERROR(DegenerateTable);
ZETA_RPA_DEFINE_ERROR(InsufficientCoefficients);
ZETA_RPA_DEFINE_ERROR(ZeroDeterminant);
ZETA_RPA_DEFINE_ERROR(IntegralityViolation);
ZETA_RPA_DEFINE_ERROR(SlowConvergence);
ZETA_RPA_DEFINE_ERROR(InvalidM);
ZETA_RPA_DEFINE_ERROR(QuadratureFailure);
ZETA_RPA_DEFINE_ERROR(InvalidArgument);
ZETA_RPA_DEFINE_ERROR(ParseError);

#undef ZETA_RPA_DEFINE_ERROR

}  // namespace zeta_rpa
