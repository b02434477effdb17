#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbilliard {

enum class ErrorCode {
  kInvalidQuantumNumbers,
  kZeroFunction,
  kFamilyMismatch,
  kEmptyClass,
  kStencilExitsDomain,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Validation failure raised by the billiard API. The code is stable and is
/// what callers (the CLI, the python bindings) dispatch on.
class BilliardError : public std::runtime_error {
 public:
  BilliardError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qbilliard
