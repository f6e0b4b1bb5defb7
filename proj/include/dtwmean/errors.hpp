#pragma once

#include <stdexcept>
#include <string>

namespace dtwmean {

/// Invalid input: empty sequences, dimension mismatches, out-of-range parameters.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or candidate set would exceed its configured guard.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dtwmean
