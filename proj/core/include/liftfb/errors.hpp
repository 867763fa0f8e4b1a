#pragma once

#include <stdexcept>
#include <string>

namespace liftfb {

// Input text that does not parse; position is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int column)
      : std::runtime_error(std::move(msg)), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// A violated operation precondition (wrong class, wrong group, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ClassViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotIrreducible : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotWS : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotHS : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInCascadeGroup : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInScaledGroup : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInSpan : public DomainError {
 public:
  using DomainError::DomainError;
};

class ClassMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateBase : public DomainError {
 public:
  using DomainError::DomainError;
};

class AbelianSpec : public DomainError {
 public:
  using DomainError::DomainError;
};

class FactorizationFailed : public DomainError {
 public:
  using DomainError::DomainError;
};

// An internal cross-check disagreed; indicates a bug, not bad input.
class PropertyViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace liftfb
