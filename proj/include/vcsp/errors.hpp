#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vcsp {

/// Structurally invalid input: unknown function names, arity mismatches,
/// out-of-range labels or variable ids.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive computation would exceed its configured budget. Raised
/// instead of silently truncating the enumeration.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A solver returned a status that the surrounding construction rules out.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parse failure in one of the text formats. Always carries a line number.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string file, std::size_t line, const std::string& message)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + message),
        file_(std::move(file)),
        line_(line),
        message_(message) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string file_;
  std::size_t line_;
  std::string message_;
};

}  // namespace vcsp
