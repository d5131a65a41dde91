#pragma once

#include <stdexcept>
#include <string>

namespace mrt {

struct invalid_argument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an exact algorithm would exceed its configured size or node budget.
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct vertex_out_of_range : std::out_of_range {
  using std::out_of_range::out_of_range;
};

}  // namespace mrt
