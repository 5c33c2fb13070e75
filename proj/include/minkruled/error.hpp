#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace minkruled {

enum class ErrorCode {
  NullInput,
  DegeneratePlane,
  OrientationMismatch,
  OutOfDomain,
  MissingAnalyticDerivative,
  DegenerateFrame,
  NotUnitSpeed,
  NullDarboux,
  InvalidInitialFrame,
  IntegrationFailure,
  NullDirection,
  DegenerateCoefficient,
  CylindricalRuling,
  IOFailure,
  InvalidConfig,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NullInput: return "NullInput";
    case ErrorCode::DegeneratePlane: return "DegeneratePlane";
    case ErrorCode::OrientationMismatch: return "OrientationMismatch";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::MissingAnalyticDerivative: return "MissingAnalyticDerivative";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::NotUnitSpeed: return "NotUnitSpeed";
    case ErrorCode::NullDarboux: return "NullDarboux";
    case ErrorCode::InvalidInitialFrame: return "InvalidInitialFrame";
    case ErrorCode::IntegrationFailure: return "IntegrationFailure";
    case ErrorCode::NullDirection: return "NullDirection";
    case ErrorCode::DegenerateCoefficient: return "DegenerateCoefficient";
    case ErrorCode::CylindricalRuling: return "CylindricalRuling";
    case ErrorCode::IOFailure: return "IOFailure";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type; `code()`
/// identifies the condition, `what()` carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace minkruled
