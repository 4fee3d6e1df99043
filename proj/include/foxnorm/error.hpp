#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace foxnorm {

enum class ErrorKind {
  UnknownCharacter,
  MalformedExponent,
  ZeroExponent,
  EmptyRelator,
  NotCyclicallyReduced,
  NotRankOne,
  NotRankTwo,
  EmptyInput,
  ZeroElement,
  RankMismatch,
  InconsistentMarkings,
  NotHalfIntegral,
  DegenerateEverywhere,
  DifferenceDoesNotExist,
  FoxCrossCheckFailed,
  WalkMarkingInconsistent,
};

std::string_view to_string(ErrorKind kind);

/// Failure raised by every foxnorm operation. The kind is stable and is what
/// the CLI maps onto exit codes; the message carries diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for errors that indicate the mathematics failed (as opposed to bad input).
  bool is_mathematical() const noexcept {
    switch (kind_) {
      case ErrorKind::InconsistentMarkings:
      case ErrorKind::DifferenceDoesNotExist:
      case ErrorKind::FoxCrossCheckFailed:
      case ErrorKind::WalkMarkingInconsistent:
      case ErrorKind::DegenerateEverywhere:
      case ErrorKind::NotHalfIntegral:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownCharacter: return "UnknownCharacter";
    case ErrorKind::MalformedExponent: return "MalformedExponent";
    case ErrorKind::ZeroExponent: return "ZeroExponent";
    case ErrorKind::EmptyRelator: return "EmptyRelator";
    case ErrorKind::NotCyclicallyReduced: return "NotCyclicallyReduced";
    case ErrorKind::NotRankOne: return "NotRankOne";
    case ErrorKind::NotRankTwo: return "NotRankTwo";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::InconsistentMarkings: return "InconsistentMarkings";
    case ErrorKind::NotHalfIntegral: return "NotHalfIntegral";
    case ErrorKind::DegenerateEverywhere: return "DegenerateEverywhere";
    case ErrorKind::DifferenceDoesNotExist: return "DifferenceDoesNotExist";
    case ErrorKind::FoxCrossCheckFailed: return "FoxCrossCheckFailed";
    case ErrorKind::WalkMarkingInconsistent: return "WalkMarkingInconsistent";
  }
  return "Unknown";
}

}  // namespace foxnorm
