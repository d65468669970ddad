#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spannerweave {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A caller broke an operation's precondition (disconnected input, size cap
// exceeded, edge not present, ...). The CLI maps this to exit code 3.
class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& what) : Error(what) {}
};

// Malformed input text. `line` is 1-based; 0 means "no line available".
// The CLI maps this to exit code 2.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::uint64_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_ = 0;
};

// A verified quantity exceeded a guaranteed bound. The CLI maps this to
// exit code 4 so CI can trip on it.
class BoundViolation : public Error {
 public:
  explicit BoundViolation(const std::string& what) : Error(what) {}
};

}  // namespace spannerweave
