#pragma once

#include <stdexcept>
#include <string>

namespace moduli {

// Raised when an operation's precondition does not hold for its input.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Malformed textual input (rationals, JSON documents).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A random generator produced a value that failed its own self-check.
class GeneratorError : public std::logic_error {
 public:
  explicit GeneratorError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace moduli
