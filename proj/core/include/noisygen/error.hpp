#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace noisygen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the collection and element parsers. `line()` is 1-based; 0 means
/// the error is not tied to a particular line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace noisygen
