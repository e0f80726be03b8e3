#pragma once

#include <stdexcept>
#include <string>

namespace jacdecomp {

/// Malformed input: bad group spec, unknown preset, invalid arguments.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed object failed one of its exact self-checks.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource limit (group order, prime search, retries) was hit.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jacdecomp
