#pragma once

#include <stdexcept>

namespace specbound {

// Input violates a hypothesis of the statement being checked (disconnected
// graph passed to a connectivity-assuming bound, family parameters outside
// the stated range, ...).
struct hypothesis_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation invoked in a state its contract forbids (e.g. classifying the
// equality case of a report that is not an equality).
struct state_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace specbound
