#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordre {

enum class ErrorKind {
  RingMismatch,
  DivisionByZeroPoly,
  CapExceeded,
  NotMonic,
  DegreeMismatch,
  IndexOutOfRange,
  NotSymmetric,
  NotPrime,
  ReducibleModulus,
  DivisionByZero,
  ContextMismatch,
  ZeroArgument,
  MalformedNotation,
  RepeatedPoint,
  PointOutOfRange,
  DegreeNotPrimePower,
  ZeroMultiplier,
  OrderCapExceeded,
  NotTransitive,
  DegreeNotPrime,
  SingularMatrix,
  DimensionMismatch,
  NotPrimePower,
  IrrationalEigenvalues,
  NotDivisor,
  NumericalInstability,
  InvalidArgument,
  ParseError,
  UnknownSubcommand,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::MalformedNotation: return "MalformedNotation";
    case ErrorKind::RepeatedPoint: return "RepeatedPoint";
    case ErrorKind::PointOutOfRange: return "PointOutOfRange";
    case ErrorKind::DegreeNotPrimePower: return "DegreeNotPrimePower";
    case ErrorKind::ZeroMultiplier: return "ZeroMultiplier";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::DegreeNotPrime: return "DegreeNotPrime";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::IrrationalEigenvalues: return "IrrationalEigenvalues";
    case ErrorKind::NotDivisor: return "NotDivisor";
    case ErrorKind::NumericalInstability: return "NumericalInstability";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSubcommand: return "UnknownSubcommand";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an `Error` carrying a kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

  /// Cap violations map to a distinct exit status in the CLI.
  bool is_cap() const noexcept {
    return kind_ == ErrorKind::CapExceeded || kind_ == ErrorKind::OrderCapExceeded;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ordre
