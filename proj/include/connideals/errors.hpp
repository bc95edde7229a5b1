#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace connideals {

/// Malformed graph input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An exact search or enumeration exceeded a configured cap. The question it
/// was answering is undecided, not answered negatively.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace connideals
