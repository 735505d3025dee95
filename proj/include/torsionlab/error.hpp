#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torsionlab {

enum class ErrorCode {
  InvalidPoset,
  NotALattice,
  SizeMismatch,
  InvalidPresentation,
  InfiniteDimensional,
  InvalidRepresentation,
  ZeroModule,
  DecompositionFailure,
  ApproximationFailure,
  NotASummand,
  InconsistentOrder,
  InconsistentMutation,
  NotABrick,
  NotASemibrick,
  LabelNotUnique,
  LabelMissing,
  OracleTooLarge,
  ArithmeticOverflow,
  DivisionByZero,
  SyntaxError,
  UnknownVertex,
  UnknownArrow,
  DuplicateName,
  NonComposablePath,
  NonPrimeCharacteristic,
  IncompleteGraph,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Diagnostics from the algebra description parser; line and column are
// 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column,
             const std::string& message)
      : Error(code, std::to_string(line) + ":" + std::to_string(column) +
                        ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace torsionlab
