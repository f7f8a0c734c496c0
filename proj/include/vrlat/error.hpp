#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vrlat {

// Base for every error raised by the library. Messages are stable strings so
// callers (and the CLI) can match on them.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a construction or reduction exceeds its simplex or time budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, int dimension_reached)
      : Error(what), dimension_reached_(dimension_reached) {}

  // Highest dimension that was fully generated before the budget ran out;
  // -1 when nothing was completed.
  int dimension_reached() const noexcept { return dimension_reached_; }

 private:
  int dimension_reached_;
};

}  // namespace vrlat
