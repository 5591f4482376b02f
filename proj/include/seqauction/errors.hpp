#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace seqauction {

/// A single broken invariant found while validating an instance.
struct Violation {
  std::string field;
  std::string rule;
  std::string message;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an instance (or a file describing one) fails validation.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  explicit ValidationError(const std::string& message);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Argument outside the domain of an operation (item out of range, odd n, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Problem too large for an exhaustive routine.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Query against a partially built table at a stage that is not ready yet.
class SequencingError : public Error {
 public:
  using Error::Error;
};

/// A strategy was paired with an instance it was not solved for.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed benchmark configuration or command-line request.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace seqauction
