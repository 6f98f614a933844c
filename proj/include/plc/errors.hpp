#pragma once

#include <stdexcept>

namespace plc {

// Invalid parameters, malformed configuration, or violated preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numeric solve could not bracket a root or failed to converge.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace plc
