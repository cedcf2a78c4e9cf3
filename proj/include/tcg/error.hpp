#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcg {

/// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates a documented precondition (self-loop, endpoint out
/// of range, isolated vertex where one is forbidden, bad parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A size or capacity limit of an exhaustive routine was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `offset` is the byte offset inside the offending
/// record, `line` the 1-based line number when parsing a multi-line file
/// (0 when not applicable).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : Error(what), offset_(offset), line_(line) {}

  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

}  // namespace tcg
