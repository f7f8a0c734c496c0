#pragma once

#include <chrono>
#include <cstddef>
#include <limits>
#include <optional>

namespace vrlat {

// Resource limits for a single complex build or homology computation.
struct Budget {
  std::size_t max_simplices = std::numeric_limits<std::size_t>::max();
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget unlimited() { return {}; }

  static Budget with_time_limit(std::chrono::milliseconds limit,
                                std::size_t max_simplices =
                                    std::numeric_limits<std::size_t>::max()) {
    Budget b;
    b.max_simplices = max_simplices;
    b.deadline = std::chrono::steady_clock::now() + limit;
    return b;
  }

  bool expired() const {
    return deadline && std::chrono::steady_clock::now() > *deadline;
  }
};

}  // namespace vrlat
