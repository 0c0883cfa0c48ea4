#pragma once

#include <stdexcept>

namespace qhalf {

/// A bounded witness search scanned its whole budget without success.
struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sampling could not certify a dense region within the given budget.
struct Inconclusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Group enumeration exceeded the configured order cap.
struct OrderCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A colouring search exceeded the configured search-space cap.
struct SearchCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qhalf
