#include "thermobar/errors.hpp"

namespace thermobar {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingKey: return "MissingKey";
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::BadOrdering: return "BadOrdering";
    case ErrorCode::BadValue: return "BadValue";
    case ErrorCode::SeedlessRandom: return "SeedlessRandom";
    case ErrorCode::InconsistentCustom: return "InconsistentCustom";
    case ErrorCode::TooFewCells: return "TooFewCells";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::LayoutMismatch: return "LayoutMismatch";
    case ErrorCode::AssemblyError: return "AssemblyError";
    case ErrorCode::SingularStep: return "SingularStep";
    case ErrorCode::WindowTooShort: return "WindowTooShort";
    case ErrorCode::EnergyUnderflow: return "EnergyUnderflow";
    case ErrorCode::EigenFailure: return "EigenFailure";
    case ErrorCode::KernelMismatch: return "KernelMismatch";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::NonNegativeAbscissa: return "NonNegativeAbscissa";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularStep:
    case ErrorCode::EnergyUnderflow:
    case ErrorCode::WindowTooShort:
    case ErrorCode::EigenFailure:
    case ErrorCode::KernelMismatch:
    case ErrorCode::NonNegativeAbscissa:
    case ErrorCode::AssemblyError:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace thermobar
