#include "ffl/error.hpp"

namespace ffl {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrimeP: return "NonPrimeP";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::NoDefaultModulus: return "NoDefaultModulus";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::IncompatibleContexts: return "IncompatibleContexts";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NegativePrecision: return "NegativePrecision";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ReducibleF: return "ReducibleF";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::ZeroTail: return "ZeroTail";
    case ErrorKind::DegreeOutOfTable: return "DegreeOutOfTable";
    case ErrorKind::TableTooSmall: return "TableTooSmall";
    case ErrorKind::NZero: return "NZero";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::TermBudgetExceeded: return "TermBudgetExceeded";
  }
  return "Unknown";
}

}  // namespace ffl
