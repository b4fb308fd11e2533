#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace axial {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  AlgebraMismatch,
  BadParameter,
  NotIdempotent,
  DecompositionFailed,
  NotAnAxis,
  NotAutomorphism,
  MixedComponent,
  NotAPaj,
  CaseMismatch,
  TooLarge,
  SymmetryFailure,
  AssociativityFailure,
  TheoremViolation,
  ParseError,
  IOFailure,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; kind() lets callers
// (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace axial
