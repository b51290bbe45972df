#pragma once

#include <stdexcept>
#include <string>

namespace thermobar {

enum class ErrorCode {
  MissingKey,
  NonPositiveParameter,
  BadOrdering,
  BadValue,
  SeedlessRandom,
  InconsistentCustom,
  TooFewCells,
  ShapeMismatch,
  ConstraintViolation,
  LayoutMismatch,
  AssemblyError,
  SingularStep,
  WindowTooShort,
  EnergyUnderflow,
  EigenFailure,
  KernelMismatch,
  BadRange,
  NonNegativeAbscissa,
  ParseError,
  UnknownKey,
  Usage,
};

const char* to_string(ErrorCode code) noexcept;

/// Numerical failures (as opposed to bad input) map to a distinct CLI exit code.
bool is_numerical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace thermobar
