#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eqspin {

/// Operands live in cyclotomic fields of different conductor.
class ConductorMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value was requested as a rational number but is irrational.
class NotRational : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Representation-ring elements over different primes were combined.
class PrimeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter tuple violates one of its structural identities.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the dataset reader; carries every violated invariant.
class DatasetError : public std::runtime_error {
 public:
  explicit DatasetError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

}  // namespace eqspin
