#include "garland/error.hpp"

namespace garland {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::MixedDimensions: return "MixedDimensions";
    case ErrorCode::DuplicateSimplex: return "DuplicateSimplex";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::RepeatedVertex: return "RepeatedVertex";
    case ErrorCode::SimplexNotFound: return "SimplexNotFound";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NoNonzeroRoot: return "NoNonzeroRoot";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnknownPaperInstance: return "UnknownPaperInstance";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace garland
