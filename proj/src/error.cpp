#include "affsphere/error.hpp"

namespace affsphere {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NearUnitModulusAmbiguity: return "NearUnitModulusAmbiguity";
    case ErrorCode::HomeoConditionViolated: return "HomeoConditionViolated";
    case ErrorCode::DegenerateImage: return "DegenerateImage";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::NoFixedPoints: return "NoFixedPoints";
    case ErrorCode::NormalizationRequired: return "NormalizationRequired";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::WitnessNotFound: return "WitnessNotFound";
    case ErrorCode::EmptyProduct: return "EmptyProduct";
    case ErrorCode::MalformedWitness: return "MalformedWitness";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace affsphere
