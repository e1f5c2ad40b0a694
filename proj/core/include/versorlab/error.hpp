#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace versorlab {

enum class ErrorCode {
  kSignatureMismatch,
  kInvalidArgument,
  kNotABivector,
  kNonUnitVersor,
  kClosureCapExceeded,
  kUnknownCatalogName,
  kNotInGroup,
  kDegenerateAngle,
  kPointAtInfinity,
  kAxiomViolation,
  kAmbiguousIrreps,
  kWitnessMismatch,
  kMcKayMismatch,
  kUnidentified,
  kParseError,
};

// Stable machine-readable name, used in CLI error JSON.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace versorlab
