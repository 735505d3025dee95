#include "torsionlab/error.hpp"

namespace torsionlab {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPoset: return "InvalidPoset";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::DecompositionFailure: return "DecompositionFailure";
    case ErrorCode::ApproximationFailure: return "ApproximationFailure";
    case ErrorCode::NotASummand: return "NotASummand";
    case ErrorCode::InconsistentOrder: return "InconsistentOrder";
    case ErrorCode::InconsistentMutation: return "InconsistentMutation";
    case ErrorCode::NotABrick: return "NotABrick";
    case ErrorCode::NotASemibrick: return "NotASemibrick";
    case ErrorCode::LabelNotUnique: return "LabelNotUnique";
    case ErrorCode::LabelMissing: return "LabelMissing";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownArrow: return "UnknownArrow";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::NonComposablePath: return "NonComposablePath";
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::IncompleteGraph: return "IncompleteGraph";
  }
  return "Unknown";
}

}  // namespace torsionlab
