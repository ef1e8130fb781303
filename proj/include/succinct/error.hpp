#pragma once

#include <stdexcept>
#include <string>

namespace succinct {

/// Malformed input: parse failures, arity/shape mismatches, bad arguments.
class input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An explicit enumeration, expansion or search cap was exceeded.
class cap_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A representation conversion that has no polynomial translation.
class unsupported_direction : public input_error {
public:
  using input_error::input_error;
};

} // namespace succinct
