#pragma once

#include <stdexcept>
#include <string>

namespace heffter {

/// Input set does not sum to zero in the ambient group.
struct NotZeroSumError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Instance exceeds an exhaustive-search bound.
struct TooLargeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A stored ordering has a repeated partial sum.
struct NotSimpleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Two parallel classes do not induce an array with k cells per line.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace heffter
