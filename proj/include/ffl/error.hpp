#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffl {

/// Error kinds raised by the library. The name of each kind is stable and is
/// what the CLI prints when a computation fails.
enum class ErrorKind {
  NonPrimeP,
  ReducibleModulus,
  NoDefaultModulus,
  InvalidArgument,
  ZeroPolynomial,
  NotMonic,
  DivisionByZero,
  InexactDivision,
  IncompatibleContexts,
  UnknownVariable,
  NonSquare,
  NegativePrecision,
  ParseError,
  ReducibleF,
  StructureViolation,
  ZeroTail,
  DegreeOutOfTable,
  TableTooSmall,
  NZero,
  NotInvertible,
  NotApplicable,
  TermBudgetExceeded,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace ffl
