#include "sfc/error.hpp"

namespace sfc {

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::SingleVertex: return "SingleVertex";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::InternalParityViolation: return "InternalParityViolation";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::NotCanonical: return "NotCanonical";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case ErrorKind::OverCap: return "OverCap";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::FixtureMismatch: return "FixtureMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::string reason)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + message),
      kind_(kind),
      reason_(std::move(reason)) {}

}  // namespace sfc
