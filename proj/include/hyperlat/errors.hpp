#pragma once

#include <stdexcept>
#include <string>

namespace hyperlat {

// Precondition violated by a caller (unknown module, level out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Module data that fails one of the structural invariants.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed quantity disagrees with a mathematical invariant it must satisfy.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Should be unreachable; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace hyperlat
