#pragma once

#include <stdexcept>
#include <string>

namespace smallcover {

/// Malformed or inconsistent input (bad lengths, invalid characteristic data).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured search or size cap was hit before the computation finished.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permuted Bott matrix never reached unipotent lower-triangular form.
class NoNormalForm : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An internal consistency check failed (e.g. H^{n+1} != 0 for a small cover).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace smallcover
