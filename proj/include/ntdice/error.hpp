#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ntdice {

enum class ErrorCode {
  MissingEdge,
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  NTooSmall,
  NotPrime,
  WrongResidueClass,
  SyntaxError,
  ParityError,
  IndexOutOfRange,
  SideCountMismatch,
  DuplicateLabelAcrossDice,
  TieDetected,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, the Python bindings) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ntdice
