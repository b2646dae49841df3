#pragma once

#include <stdexcept>
#include <string>

namespace omegaq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the text parsers; line is 1-based, 0 when unknown.
struct ParseError : Error {
  int line;
  ParseError(int line, const std::string &msg)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line(line) {}
};

} // namespace omegaq
