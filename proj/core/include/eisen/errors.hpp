#pragma once

#include <stdexcept>
#include <string>

namespace eisen {

/// Precondition violation on caller-supplied values (degree, height, range).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the range covered by a precomputed table.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A configured resource limit (memory, enumeration budget) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eisen
