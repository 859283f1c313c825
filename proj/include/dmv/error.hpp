#ifndef DMV_ERROR_HPP
#define DMV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dmv {

enum class ErrorKind {
  EmptyFamily,
  MaskOutOfRange,
  IndexOutOfRange,
  GroundSetTooLarge,
  NotSymmetric,
  SpaceMismatch,
  NotLagrangian,
  SameElement,
  SameVertex,
  SameEdge,
  NotAdjacent,
  Disconnected,
  NotBinary,
  DegreeTooLarge,
  UnsupportedFlavor,
  CoidealViolation,
  MissingValue,
  NotMultiplicative,
  InvalidRibbon,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::MaskOutOfRange: return "MaskOutOfRange";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::NotLagrangian: return "NotLagrangian";
    case ErrorKind::SameElement: return "SameElement";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::SameEdge: return "SameEdge";
    case ErrorKind::NotAdjacent: return "NotAdjacent";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotBinary: return "NotBinary";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::UnsupportedFlavor: return "UnsupportedFlavor";
    case ErrorKind::CoidealViolation: return "CoidealViolation";
    case ErrorKind::MissingValue: return "MissingValue";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::InvalidRibbon: return "InvalidRibbon";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// that front ends can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures additionally remember the 1-based line they occurred on.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace dmv

#endif  // DMV_ERROR_HPP
