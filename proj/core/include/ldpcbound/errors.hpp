#pragma once

#include <stdexcept>

namespace ldpcbound {

// Rejected inputs: schema violations, out-of-range parameters, mismatched
// degree supports. Maps to CLI exit code 1.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Failures of the numerics themselves: degenerate denominators, bracket
// failures, detected non-monotonicity. Maps to CLI exit code 2.
class numeric_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ldpcbound
