#pragma once

#include <stdexcept>
#include <string>

namespace hilfrac {

/// Input violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size limit would be exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Seeing one means a bug, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hilfrac
