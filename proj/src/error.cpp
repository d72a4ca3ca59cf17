#include "cmw/error.hpp"

namespace cmw {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAnEquivalence: return "NotAnEquivalence";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ModulusViolation: return "ModulusViolation";
    case ErrorKind::ApartnessNotWitnessed: return "ApartnessNotWitnessed";
    case ErrorKind::BadBracket: return "BadBracket";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::NotIncreasing: return "NotIncreasing";
    case ErrorKind::ShiftOutOfRange: return "ShiftOutOfRange";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::ParameterError: return "ParameterError";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::MissingPartial: return "MissingPartial";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cmw
