#pragma once

#include <stdexcept>
#include <string>

namespace evencycle {

// A caller-side contract was not met (bad input, hypothesis does not hold).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input text could not be parsed into a graph.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An exact search ran out of its vertex or step budget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Something that must hold when the preconditions hold did not. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace evencycle
