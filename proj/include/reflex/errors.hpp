#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace reflex {

// Every domain failure carries one of these codes; the CLI prints name() verbatim.
enum class ErrorCode {
  // kernel
  UnboundedInput,
  EmptyInput,
  LowerDimensional,
  OriginNotInterior,
  NonPositiveFactor,
  CollapsedPolytope,
  DimensionMismatch,
  InvalidInput,
  // ehrhart
  ScaleExceeded,
  ValidationFailed,
  PeriodNotOne,
  // classify / toric / flag
  InternalInconsistency,
  NotQuasiLattice,
  EmptyOrUnbounded,
  UnsupportedType,
  NotPRegular,
  // fuzz
  GenerationExhausted,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message)
      : std::runtime_error(message), code_(code), module_(std::move(module)) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

}  // namespace reflex
