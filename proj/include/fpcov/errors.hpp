#pragma once

#include <stdexcept>
#include <string>

namespace fpcov {

/// Model-spec text could not be parsed. kind() identifies the violated
/// rule; the message names the offending term.
class ParseError : public std::runtime_error {
public:
  enum class Kind {
    MalformedTerm,
    BadCardinality,         // v < 2
    BadCount,               // k < 1 (or absurdly large)
    BadStrength,            // t < 2
    StrengthExceedsParams,  // t > parameter count
    MissingStrength,
    DuplicateStrength,
    NoParameters,
  };

  ParseError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// Invalid engine or run configuration.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The tuple universe of a model does not fit the memory budget.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The generator gave up: too many consecutive evolve calls produced a
/// zero-fitness best pollen.
class StallError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace fpcov
