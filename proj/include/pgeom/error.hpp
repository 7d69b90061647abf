#pragma once

#include <stdexcept>
#include <string>

namespace pgeom {

// Caller passed something outside an operation's domain (wrong ground size,
// wrong cardinality, inconsistent parameters).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input could not be parsed into a matrix / design.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input parsed but breaks a structural invariant (e.g. two blocks of a
// would-be design meet in the wrong number of points).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations of the same fact disagree. Always a bug or a
// counterexample; never swallowed.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pgeom
