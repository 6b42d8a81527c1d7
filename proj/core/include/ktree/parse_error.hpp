#pragma once

#include <stdexcept>
#include <string>

namespace ktree {

/// Malformed input, with the 1-based line number where it was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ktree
