#ifndef LIECHAN_ERROR_HPP
#define LIECHAN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace liechan {

enum class ErrorKind {
  DimensionMismatch,
  NotHermitian,
  NotDensityMatrix,
  ConvergenceFailure,
  InvalidArgument,
  NotScalar,
  POutOfRange,
  Unnormalized,
  TraceCondition,
  SpanDeficient,
  NoTwoToOneIdentity,
  TriangleConstraint,
  ConstructionFailure,
  Parse,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotScalar: return "NotScalar";
    case ErrorKind::POutOfRange: return "POutOfRange";
    case ErrorKind::Unnormalized: return "Unnormalized";
    case ErrorKind::TraceCondition: return "TraceCondition";
    case ErrorKind::SpanDeficient: return "SpanDeficient";
    case ErrorKind::NoTwoToOneIdentity: return "NoTwoToOneIdentity";
    case ErrorKind::TriangleConstraint: return "TriangleConstraint";
    case ErrorKind::ConstructionFailure: return "ConstructionFailure";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace liechan

#endif
