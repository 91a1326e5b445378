#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistkit {

enum class ErrorKind {
  DivisionByZero,
  PoleAtAllSamples,
  TruncationExceeded,
  NotScalarBase,
  DimensionMismatch,
  MCHViolated,
  NoSolvedRule,
  NotInvariant,
  UnsupportedDegree,
  OrderTooHigh,
  SingularMatrix,
  NotVertical,
  NoDecomposition,
  NotExponentialForm,
  UnknownSymbol,
  SyntaxError,
  ArityError,
  UndeclaredReference,
  DuplicateDeclaration,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above; the
/// report layer prints the kind name verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace twistkit
