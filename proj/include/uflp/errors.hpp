#pragma once

#include <stdexcept>
#include <string>

namespace uflp {

/// Error raised while reading instance, solution or CSV text. The kind
/// distinguishes the failure classes callers may want to test for.
class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    Header,     // first data line is not "n m" with valid counts
    RowLength,  // a line holds the wrong number of tokens
    Token,      // a token is not an integer of the expected form
    Invariant,  // values violate the data model (e.g. a service cost < 1)
    Io,         // underlying stream failure
  };

  ParseError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Raised when an operation would leave no facility open, or is asked to
/// evaluate the all-closed state. Every customer must be served, so that
/// state has no defined objective.
class FeasibilityError : public std::runtime_error {
 public:
  explicit FeasibilityError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace uflp
