#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vrlat/formulas.hpp"
#include "vrlat/homology.hpp"

namespace vrlat {

enum class EntryStatus { Ok, Skipped, Error };

struct ReportEntry {
  std::string spec;
  int scale = 0;
  int max_dim = 0;
  std::vector<std::size_t> f_vector;
  std::optional<BettiVector> betti;
  std::optional<std::int64_t> chi;
  // Expected reduced Betti numbers and the formula that produced them.
  std::optional<std::vector<Count>> oracle;
  std::string oracle_name;
  // Present iff oracle is present and the entry ran.
  std::optional<bool> match;
  EntryStatus status = EntryStatus::Ok;
  std::string reason;
  double wall_time_ms = 0;
};

struct Report {
  std::string suite;
  std::vector<ReportEntry> entries;

  // True when every entry that ran matched its oracle.
  bool all_matched() const;
};

enum class ReportFormat { Json, Csv, Text };

struct EmitOptions {
  // Wall times are the only nondeterministic field; leaving them out makes
  // output byte-identical across runs.
  bool timings = true;
};

// CSV columns: spec,scale,max_dim,betti,oracle,match,wall_time_ms. Betti and
// oracle vectors are ';'-separated; match is true, false, skipped, error, or
// empty when there is no oracle.
std::string emit_report(const Report& r, ReportFormat format, const EmitOptions& options = {});

// {"family","scale","coeff","betti","complete_through","chi"}; chi is null for
// truncated complexes.
std::string homology_json(const std::string& family, int scale, Coefficients coeff,
                          const std::vector<std::uint64_t>& betti, int complete_through,
                          std::optional<std::int64_t> chi);

ReportFormat parse_report_format(const std::string& name);

}  // namespace vrlat
