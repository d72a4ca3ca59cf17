#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cmw {

enum class ErrorKind {
  NotAnEquivalence,
  CapExceeded,
  DivisionByZero,
  ModulusViolation,
  ApartnessNotWitnessed,
  BadBracket,
  InvalidPermutation,
  SizeMismatch,
  UnknownElement,
  NotASubgroup,
  NotAGroup,
  DimensionMismatch,
  Singular,
  ZeroVector,
  UnknownPoint,
  NotIncreasing,
  ShiftOutOfRange,
  GridTooCoarse,
  ParameterError,
  NoConvergence,
  MissingPartial,
  ParseError,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

// Every library failure is reported through this type; `kind()` names the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view kind_name() const noexcept { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace cmw
