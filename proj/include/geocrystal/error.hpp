#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geocrystal {

enum class ErrorKind {
  InvalidRank,
  OutOfRange,
  NotInImage,
  Incompatible,
  DimensionMismatch,
  Ghost,
  Membership,
  Precondition,
  BudgetExceeded,
  Exhausted,
  Parse,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidRank: return "invalid-rank";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::NotInImage: return "not-in-image";
    case ErrorKind::Incompatible: return "incompatible";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::Ghost: return "ghost";
    case ErrorKind::Membership: return "membership";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::Exhausted: return "exhausted";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) throw Error(kind, what);
}

}  // namespace geocrystal
