#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gelfand {

enum class ErrorCode {
  DivisionByZero,
  PrecisionExhausted,
  HenselDegenerate,
  InvalidField,
  NotCommutative,
  NotAssociative,
  BadUnit,
  DimensionMismatch,
  DimensionCapExceeded,
  UnsupportedAlgebra,
  ImproperIdeal,
  NotIdempotent,
  NotGelfandUnsplit,
  NotGelfand,
  NotMorphism,
  SearchBudgetExceeded,
  ModulusViolated,
  DepthExceeded,
  SchemaError,
  IoError,
};

/// Stable machine-readable name, used as the `reason.code` field of reports.
std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library. `code()` drives the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gelfand
