#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hnl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated (index out of range, arity
/// mismatch, non-increasing multiindex, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial or operator expression.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A certifying check would exceed the configured tuple budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t required, std::size_t budget)
      : Error("check requires " + std::to_string(required) + " tuples, budget is " +
              std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::size_t required() const { return required_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t required_;
  std::size_t budget_;
};

}  // namespace hnl
