#include "sharplp/errors.hpp"

namespace sharplp {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::MisalignedFunction: return "MisalignedFunction";
    case Errc::NonpositiveValueForNegativeP: return "NonpositiveValueForNegativeP";
    case Errc::ZeroValueInReverseRegion: return "ZeroValueInReverseRegion";
    case Errc::ZeroExponent: return "ZeroExponent";
    case Errc::ZeroSumPoint: return "ZeroSumPoint";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::ZeroNorm: return "ZeroNorm";
    case Errc::NotProbabilitySpace: return "NotProbabilitySpace";
    case Errc::OutOfRangeAlpha: return "OutOfRangeAlpha";
    case Errc::NonpositiveArgument: return "NonpositiveArgument";
    case Errc::EndpointWithNegativeP: return "EndpointWithNegativeP";
    case Errc::ExponentOutOfRange: return "ExponentOutOfRange";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::TargetOutOfRange: return "TargetOutOfRange";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::DomainError: return "DomainError";
    case Errc::NameRequiresC: return "NameRequiresC";
    case Errc::TooCoarse: return "TooCoarse";
    case Errc::ZeroPair: return "ZeroPair";
    case Errc::InvalidSpace: return "InvalidSpace";
    case Errc::DimOutOfRange: return "DimOutOfRange";
    case Errc::NotPSD: return "NotPSD";
    case Errc::UnsupportedExponent: return "UnsupportedExponent";
  }
  return "Unknown";
}

}  // namespace sharplp
