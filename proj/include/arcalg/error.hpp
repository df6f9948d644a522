#pragma once

#include <stdexcept>
#include <string>

namespace arcalg {

/// Malformed input: bad sizes, out-of-range indices, unparsable values.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates a mathematical precondition
/// (non-ideal arc set, mismatched decoration kinds, ...).
class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear combination that is not constant on some fiber of eta.
class NotInSubspace : public SemanticError {
 public:
  NotInSubspace(const std::string& what, std::string witness)
      : SemanticError(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// Requested size exceeds a configured enumeration limit.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace arcalg
