#pragma once

#include <chrono>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "vrlat/report.hpp"

namespace vrlat {

enum class Suite { Uniform, Adjacent, Skip, Prefix, Power, All };

Suite parse_suite(const std::string& name);
std::string suite_name(Suite s);

// One complex to build and compare against a closed-form Betti vector.
struct Instance {
  std::string spec;
  int scale = 2;
  int max_dim = 3;
  std::vector<Count> oracle;  // reduced Betti 0..max_dim-1
  std::string oracle_name;
};

struct VerifyOptions {
  int m_max = 6;
  std::chrono::milliseconds time_budget{std::chrono::minutes(10)};
  std::size_t max_simplices = std::numeric_limits<std::size_t>::max();
  unsigned threads = 1;
  // Replaces the suite default (3 for S^2 suites, 4 for S^3 suites).
  std::optional<int> max_dim;
};

// In-regime instances of a suite with ground size at most m_max, in
// canonical order.
std::vector<Instance> suite_instances(Suite suite, int m_max, std::optional<int> max_dim = {});

ReportEntry run_instance(const Instance& instance, std::chrono::milliseconds time_budget,
                         std::size_t max_simplices = std::numeric_limits<std::size_t>::max());

// Runs every instance of the suite on a worker pool; entries keep canonical
// order. Over-budget instances are reported as skipped.
Report run_verify(Suite suite, const VerifyOptions& options);

// Compares the Betti vectors of F_n ∪ F_{n+1} ∪ F_{n+2} and F_n ∪ F_{n+2}
// over [m] at scale 2, through dimension 3. Requires 1 <= n < m-3.
ReportEntry run_three_layer_check(int m, int n);

// Worker count from VRLAT_THREADS, defaulting to the hardware concurrency.
unsigned worker_threads_from_env();

}  // namespace vrlat
