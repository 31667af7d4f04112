#pragma once

#include <stdexcept>
#include <string>

namespace abdkit {

// Invalid or malformed caller input (bad JSON, unknown name, bad dimensions).
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematical precondition of a construction is not met (e.g. a cocycle
// check fails).  Carries an optional human-readable witness description.
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what, std::string witness = "")
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

private:
  std::string witness_;
};

// A library invariant that should be unbreakable was breached.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace abdkit
