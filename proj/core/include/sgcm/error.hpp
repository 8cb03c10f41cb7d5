#pragma once

#include <stdexcept>
#include <string>

namespace sgcm {

/// Malformed or out-of-contract input (bad dimensions, negative entries, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside the supported class, e.g. a cone containing a line.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object failed one of its own invariants.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sgcm
