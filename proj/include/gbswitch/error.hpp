#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gbswitch {

enum class ErrorKind {
  LengthMismatch,
  NonUnimodularEntry,
  SizeOverflow,
  DimMismatch,
  AxisOutOfRange,
  InvalidExponent,
  BudgetExceeded,
  DegenerateInput,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// All recoverable failures raised by the library carry an ErrorKind so that
/// callers (and tests) can branch on the category rather than the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gbswitch
