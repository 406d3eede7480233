#pragma once

#include <stdexcept>
#include <string>

namespace crossrel {

// An operation was asked to enumerate past its configured ceiling.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested endpoints cannot be joined by any usable physical path.
struct NoPathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace crossrel
