#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace primeclique {

// A caller broke a documented precondition (bad parameter, missing vertex,
// non-dividing divisor, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Data that should be internally consistent is not: asymmetric weights,
// a clique id that does not decode, a reported clique that is not complete.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text. The message already carries the line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + ", line " + std::to_string(line)),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace primeclique
