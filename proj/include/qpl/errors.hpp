#pragma once

#include <stdexcept>

namespace qpl {

// Thrown when an exhaustive operation is asked to run past its configured
// size bound (search orders, holomorph carrier size, variable counts).
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qpl
