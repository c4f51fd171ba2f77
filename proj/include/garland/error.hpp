#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace garland {

enum class ErrorCode {
  NonPrimeCharacteristic,
  InvalidDegree,
  DivisionByZero,
  FieldMismatch,
  MixedDimensions,
  DuplicateSimplex,
  EmptyInput,
  RepeatedVertex,
  SimplexNotFound,
  DimensionOutOfRange,
  AmbientMismatch,
  DimensionMismatch,
  DegreeMismatch,
  DegreeOutOfRange,
  UnknownVertex,
  UnknownType,
  NotSquare,
  CertificationFailed,
  NotSquarefree,
  NoNonzeroRoot,
  BudgetExceeded,
  UnknownPaperInstance,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace garland
