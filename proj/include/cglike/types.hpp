#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cglike {

using Scalar = double;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

enum class ErrorKind {
  DimensionMismatch,
  NonFiniteInput,
  NonFiniteOutput,
  NotInCatalog,
  InvalidDimension,
  InvalidConfig,
  StepFloorReached,
  NotDescent,
  ZeroPreviousDirection,
  ZeroPreviousGradient,
  DegenerateCurvature,
  NonConvergence,
  EmptyMatrix,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::NonFiniteOutput: return "NonFiniteOutput";
    case ErrorKind::NotInCatalog: return "NotInCatalog";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::StepFloorReached: return "StepFloorReached";
    case ErrorKind::NotDescent: return "NotDescent";
    case ErrorKind::ZeroPreviousDirection: return "ZeroPreviousDirection";
    case ErrorKind::ZeroPreviousGradient: return "ZeroPreviousGradient";
    case ErrorKind::DegenerateCurvature: return "DegenerateCurvature";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::EmptyMatrix: return "EmptyMatrix";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cglike
