#pragma once

#include <stdexcept>

namespace weylmech {

/// Two operands live on different grids, or a grid is malformed.
class GridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input contains NaN or infinity.
class NonFiniteError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value violates a documented precondition (normalization, Hermiticity, resolution, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A propagation produced unusable values.
class InstabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace weylmech
