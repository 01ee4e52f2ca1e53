#pragma once

#include <stdexcept>
#include <string>

namespace opalg {

/// Malformed input: bad dimensions, non-ideals, invalid groups or actions.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The base field cannot support the requested computation.
class FieldGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural result was contradicted by a computation. Carries a
/// human-readable certificate describing the failed check.
class TheoremViolation : public std::logic_error {
 public:
  explicit TheoremViolation(const std::string& certificate)
      : std::logic_error("theorem contradiction: " + certificate) {}
};

}  // namespace opalg
