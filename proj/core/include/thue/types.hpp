#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace thue {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Color = std::int32_t;

/// A sequence of color ids. Alphabet is whatever integers appear.
using ColorWord = std::vector<Color>;

/// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised for malformed input documents. `line` is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

}  // namespace thue
