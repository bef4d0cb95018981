#include "iwahori/error.hpp"

namespace iwahori {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidDatum: return "InvalidDatum";
    case ErrorCode::NonDominantInput: return "NonDominantInput";
    case ErrorCode::DatumMismatch: return "DatumMismatch";
    case ErrorCode::EmptyRootSystem: return "EmptyRootSystem";
    case ErrorCode::InfiniteWJ: return "InfiniteWJ";
    case ErrorCode::NonSigmaStableJ: return "NonSigmaStableJ";
    case ErrorCode::IncompatibleTwist: return "IncompatibleTwist";
    case ErrorCode::IncompatibleQuotient: return "IncompatibleQuotient";
    case ErrorCode::NoStep: return "NoStep";
    case ErrorCode::NonDominantResult: return "NonDominantResult";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::NotInLoopGroup: return "NotInLoopGroup";
    case ErrorCode::LiftNotFound: return "LiftNotFound";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace iwahori
