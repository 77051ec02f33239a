#pragma once

#include <stdexcept>
#include <string>

namespace sgspec {

enum class ErrorCode {
  DuplicateEdge,
  SelfLoop,
  BadSign,
  VertexOutOfRange,
  NotBipartite,
  UnderlyingGraphMismatch,
  ParseError,
  ConvergenceFailure,
  NotEquitable,
  ZeroVector,
  EdgePresent,
  EdgeAbsent,
  NotNegative,
  BadParams,
  BudgetExceeded,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable error kind. The CLI maps kinds to
/// exit codes, so throw sites must pick the kind carefully.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sgspec
