#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polycenter {

enum class ErrorKind {
  InvalidInput,
  DimensionMismatch,
  NoIsometry,
  OutOfDomain,
  DegenerateNormalization,
  UnknownName,
  ZeroValue,
  Inconsistent,
  NoValidTriple,
  PointOffLine,
  BadWeights,
  CoincidentCenters,
  Infeasible,
  NotARectangle,
  Degenerate,
  TooFew,
  FlatTrigon,
  NotConvex,
  NotTangential,
  NumericallyNegative,
  BadAngles,
  ZeroArea,
  NotParallelogram,
  SyntaxError,
  IndexOutOfRange,
  NegativeSqrt,
  DivisionByZero,
  SymmetryViolation,
  DegreeInconsistent,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every library operation. The kind is stable and
/// is what the CLI reports in its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polycenter
