#pragma once

#include <stdexcept>
#include <string>

namespace troplab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation's precondition does not hold for its input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested genus or arrow has no implementation (e.g. psi for g >= 4).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A proposition-grade statement failed on a concrete input. The witness is
/// a self-contained JSON document that reproduces the failure in one call.
class FalsificationError : public Error {
 public:
  FalsificationError(const std::string& what, std::string witness)
      : Error(what + " (witness: " + witness + ")"), witness_(std::move(witness)) {}

  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

}  // namespace troplab
