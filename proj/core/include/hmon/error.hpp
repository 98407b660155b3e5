#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hmon {

enum class ErrorCode {
  DivisionLeavesRing,
  SingularMatrix,
  NotMono,
  CokernelNotOmegaTorsion,
  NonSquare,
  SquareNotCommuting,
  ContextMismatch,
  InvalidWitness,
  NotExactTriangle,
  SquaresNotHomotopyCommuting,
  NotComposable,
  InfiniteResidueField,
  NotIndecomposable,
  ProjectiveObject,
  ParametersTooLarge,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this type; `code()` names the
/// violated contract, `what()` carries a human-readable diagnosis.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hmon
