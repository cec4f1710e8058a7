#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sfc {

enum class ErrorKind {
  NotATree,
  SingleVertex,
  ResourceLimit,
  InternalParityViolation,
  SearchExhausted,
  NotCanonical,
  TooSmall,
  ShapeMismatch,
  NotInImage,
  NotRegular,
  TooLarge,
  NoConvergence,
  BadParameters,
  RejectionBudgetExceeded,
  OverCap,
  Disconnected,
  ParseError,
  IoError,
  FixtureMismatch,
};

std::string_view kind_name(ErrorKind kind) noexcept;

/// Domain error raised by every module. `reason()` carries a sub-code for
/// kinds that have one (NotInImage); it is empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string reason = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  ErrorKind kind_;
  std::string reason_;
};

}  // namespace sfc
