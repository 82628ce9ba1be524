#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace acplx {

enum class ErrorCode {
  DimensionMismatch,
  AxisOutOfRange,
  ModelMismatch,
  OddDimension,
  Antisymmetry,
  JacobiViolation,
  MixedRing,
  NotAlmostComplex,
  NotIntegrable,
  BadParameter,
  InvalidWindow,
  WindowOverflow,
  NotASubspace,
  AmbientMismatch,
  Syntax,
  NonIntegerFrequency,
  UnknownCoordinate,
  InvalidSpec,
  AssemblyBug,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AxisOutOfRange: return "AxisOutOfRange";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::Antisymmetry: return "Antisymmetry";
    case ErrorCode::JacobiViolation: return "JacobiViolation";
    case ErrorCode::MixedRing: return "MixedRing";
    case ErrorCode::NotAlmostComplex: return "NotAlmostComplex";
    case ErrorCode::NotIntegrable: return "NotIntegrable";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::InvalidWindow: return "InvalidWindow";
    case ErrorCode::WindowOverflow: return "WindowOverflow";
    case ErrorCode::NotASubspace: return "NotASubspace";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::NonIntegerFrequency: return "NonIntegerFrequency";
    case ErrorCode::UnknownCoordinate: return "UnknownCoordinate";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::AssemblyBug: return "AssemblyBug";
  }
  return "Unknown";
}

/// Single exception type for the library. `details` carries one line per
/// violated invariant when several are detected at once (model validation).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::string> details = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        details_(std::move(details)) {}

  ErrorCode code() const { return code_; }
  const std::vector<std::string>& details() const { return details_; }

 private:
  ErrorCode code_;
  std::vector<std::string> details_;
};

/// Input errors are the caller's fault; everything else signals a failed check.
inline bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotASubspace:
    case ErrorCode::AssemblyBug:
    case ErrorCode::WindowOverflow:
      return false;
    default:
      return true;
  }
}

}  // namespace acplx
