#pragma once

#include <stdexcept>
#include <string>

namespace ratioset {

/// Input that violates an operation's precondition (bad fraction, bad E, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is valid but exceeds what the exact engines can handle, e.g. a
/// connected component too large for exact enumeration. Callers should fall
/// back to Monte Carlo.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ratioset
