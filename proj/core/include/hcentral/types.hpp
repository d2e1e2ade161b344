#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hcentral {

/// Citation counts and citation sums. Signed so that arithmetic on
/// differences (tails, residual-style quantities) stays natural.
using Count = std::int64_t;

/// Base class for domain errors raised by the library (undefined radius,
/// undefined correlation, bad epochs, ...). API misuse such as negative
/// prefix lengths throws std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input-file rejection carrying the 1-based line number of the offending
/// row; the header counts as line 1.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hcentral
