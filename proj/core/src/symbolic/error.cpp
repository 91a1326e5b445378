#include "twistkit/symbolic/error.hpp"

namespace twistkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtAllSamples: return "PoleAtAllSamples";
    case ErrorKind::TruncationExceeded: return "TruncationExceeded";
    case ErrorKind::NotScalarBase: return "NotScalarBase";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MCHViolated: return "MCHViolated";
    case ErrorKind::NoSolvedRule: return "NoSolvedRule";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::OrderTooHigh: return "OrderTooHigh";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotVertical: return "NotVertical";
    case ErrorKind::NoDecomposition: return "NoDecomposition";
    case ErrorKind::NotExponentialForm: return "NotExponentialForm";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::UndeclaredReference: return "UndeclaredReference";
    case ErrorKind::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& detail) {
  std::string out(to_string(kind));
  if (!detail.empty()) {
    out += ": ";
    out += detail;
  }
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(compose(kind, detail)), kind_(kind), detail_(detail) {}

}  // namespace twistkit
