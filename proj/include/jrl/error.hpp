#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jrl {

enum class ErrorKind {
  InvalidTable,     // wrong shape or out-of-range entry
  NotAbelianGroup,  // additive structure of a ring
  NotAssociative,
  NoIdentity,
  NotDistributive,
  NoInverse,
  UnknownName,
  ContextMismatch,
  EmptySequence,
  InvalidExponent,
  TooLarge,
  ParseError,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind; the
/// message names the offending elements (or the line, for parse errors).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures additionally record the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace jrl
