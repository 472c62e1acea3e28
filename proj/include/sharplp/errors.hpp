#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sharplp {

enum class Errc {
  MisalignedFunction,
  NonpositiveValueForNegativeP,
  ZeroValueInReverseRegion,
  ZeroExponent,
  ZeroSumPoint,
  NegativeInput,
  ZeroNorm,
  NotProbabilitySpace,
  OutOfRangeAlpha,
  NonpositiveArgument,
  EndpointWithNegativeP,
  ExponentOutOfRange,
  OutOfDomain,
  TargetOutOfRange,
  SingularPoint,
  DomainError,
  NameRequiresC,
  TooCoarse,
  ZeroPair,
  InvalidSpace,
  DimOutOfRange,
  NotPSD,
  UnsupportedExponent,
};

std::string_view to_string(Errc code) noexcept;

/// Every precondition failure in the library is reported as an Error
/// carrying a machine-checkable code; nothing is silently clamped to inf/NaN.
class Error : public std::domain_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::domain_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

inline void require(bool condition, Errc code, const std::string& detail) {
  if (!condition) fail(code, detail);
}

}  // namespace sharplp
