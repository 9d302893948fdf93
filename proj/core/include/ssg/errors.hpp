#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ssg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a presentation is rejected. Subclasses name the violated rule.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public ValidationError {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : ValidationError("syntax error at " + std::to_string(line) + ":" +
                        std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class NotAPermutation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DanglingRestriction : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NoIdentity : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DuplicateBisimilarStates : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The subset digraph would need more vertices than the configured limit.
class CapacityExceeded : public Error {
 public:
  CapacityExceeded(std::uint64_t required, std::uint64_t limit)
      : Error("subset digraph needs " + std::to_string(required) +
              " vertices, capacity is " + std::to_string(limit)),
        required_(required),
        limit_(limit) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

/// A structural fact guaranteed for genuine nuclei failed to hold.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// Products of subgroup elements left the candidate subgroup.
class NotClosed : public Error {
 public:
  using Error::Error;
};

class NotContractedWithinBound : public Error {
 public:
  NotContractedWithinBound(std::size_t rounds, std::size_t frontier)
      : Error("restriction closure did not stabilise within " +
              std::to_string(rounds) + " rounds (frontier holds " +
              std::to_string(frontier) + " elements)"),
        frontier_(frontier) {}

  std::size_t frontier_size() const noexcept { return frontier_; }

 private:
  std::size_t frontier_;
};

class NotPrime : public std::invalid_argument {
 public:
  explicit NotPrime(std::uint64_t p)
      : std::invalid_argument(std::to_string(p) + " is not prime") {}
};

class MorphismViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ssg
