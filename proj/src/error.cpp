#include "polycenter/error.hpp"

namespace polycenter {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput:
      return "InvalidInput";
    case ErrorKind::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorKind::NoIsometry:
      return "NoIsometry";
    case ErrorKind::OutOfDomain:
      return "OutOfDomain";
    case ErrorKind::DegenerateNormalization:
      return "DegenerateNormalization";
    case ErrorKind::UnknownName:
      return "UnknownName";
    case ErrorKind::ZeroValue:
      return "ZeroValue";
    case ErrorKind::Inconsistent:
      return "Inconsistent";
    case ErrorKind::NoValidTriple:
      return "NoValidTriple";
    case ErrorKind::PointOffLine:
      return "PointOffLine";
    case ErrorKind::BadWeights:
      return "BadWeights";
    case ErrorKind::CoincidentCenters:
      return "CoincidentCenters";
    case ErrorKind::Infeasible:
      return "Infeasible";
    case ErrorKind::NotARectangle:
      return "NotARectangle";
    case ErrorKind::Degenerate:
      return "Degenerate";
    case ErrorKind::TooFew:
      return "TooFew";
    case ErrorKind::FlatTrigon:
      return "FlatTrigon";
    case ErrorKind::NotConvex:
      return "NotConvex";
    case ErrorKind::NotTangential:
      return "NotTangential";
    case ErrorKind::NumericallyNegative:
      return "NumericallyNegative";
    case ErrorKind::BadAngles:
      return "BadAngles";
    case ErrorKind::ZeroArea:
      return "ZeroArea";
    case ErrorKind::NotParallelogram:
      return "NotParallelogram";
    case ErrorKind::SyntaxError:
      return "SyntaxError";
    case ErrorKind::IndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorKind::NegativeSqrt:
      return "NegativeSqrt";
    case ErrorKind::DivisionByZero:
      return "DivisionByZero";
    case ErrorKind::SymmetryViolation:
      return "SymmetryViolation";
    case ErrorKind::DegreeInconsistent:
      return "DegreeInconsistent";
  }
  return "Unknown";
}

}  // namespace polycenter
