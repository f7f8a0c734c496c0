#include "vrlat/report.hpp"

#include <cstdio>
#include "json.hpp"

namespace vrlat {

namespace {

using json = nlohmann::ordered_json;

const char* status_name(EntryStatus s) {
  switch (s) {
    case EntryStatus::Ok: return "ok";
    case EntryStatus::Skipped: return "skipped";
    case EntryStatus::Error: return "error";
  }
  return "error";
}

template <typename T>
std::string join(const std::vector<T>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

json entry_json(const ReportEntry& e, const EmitOptions& opt) {
  json j;
  j["family"] = e.spec;
  j["scale"] = e.scale;
  j["max_dim"] = e.max_dim;
  j["status"] = status_name(e.status);
  if (!e.reason.empty()) j["reason"] = e.reason;
  j["f_vector"] = e.f_vector;
  if (e.betti) {
    j["coeff"] = e.betti->coeff == Coefficients::Z2 ? "z2" : "int";
    j["betti"] = e.betti->values;
    j["complete_through"] = e.betti->complete_through;
  }
  j["chi"] = e.chi ? json(*e.chi) : json(nullptr);
  if (e.oracle) {
    j["oracle"] = *e.oracle;
    j["oracle_name"] = e.oracle_name;
  }
  if (e.match) j["match"] = *e.match;
  if (opt.timings) j["wall_time_ms"] = e.wall_time_ms;
  return j;
}

}  // namespace

bool Report::all_matched() const {
  for (const auto& e : entries) {
    if (e.status == EntryStatus::Skipped) continue;
    if (e.status == EntryStatus::Error) return false;
    if (e.match && !*e.match) return false;
  }
  return true;
}

std::string emit_report(const Report& r, ReportFormat format, const EmitOptions& options) {
  switch (format) {
    case ReportFormat::Json: {
      json j;
      if (!r.suite.empty()) j["suite"] = r.suite;
      j["entries"] = json::array();
      for (const auto& e : r.entries) j["entries"].push_back(entry_json(e, options));
      return j.dump();
    }
    case ReportFormat::Csv: {
      std::string out = "spec,scale,max_dim,betti,oracle,match,wall_time_ms\n";
      for (const auto& e : r.entries) {
        std::string match;
        if (e.status == EntryStatus::Skipped) match = "skipped";
        else if (e.status == EntryStatus::Error) match = "error";
        else if (e.match) match = *e.match ? "true" : "false";
        out += "\"" + e.spec + "\"," + std::to_string(e.scale) + "," + std::to_string(e.max_dim) + "," +
               (e.betti ? join(e.betti->values, ';') : "") + "," + (e.oracle ? join(*e.oracle, ';') : "") +
               "," + match + "," + (options.timings ? format_ms(e.wall_time_ms) : "") + "\n";
      }
      return out;
    }
    case ReportFormat::Text: {
      std::string out;
      if (!r.suite.empty()) out += "suite " + r.suite + "\n";
      for (const auto& e : r.entries) {
        out += e.spec + " @ r=" + std::to_string(e.scale) + " (D=" + std::to_string(e.max_dim) + "): ";
        if (e.status != EntryStatus::Ok) {
          out += std::string(e.status == EntryStatus::Skipped ? "SKIPPED" : "ERROR") + " " + e.reason;
        } else {
          out += "betti=[" + (e.betti ? join(e.betti->values, ',') : "") + "]";
          if (e.oracle)
            out += " oracle=[" + join(*e.oracle, ',') + "] " + e.oracle_name + " " +
                   (e.match && *e.match ? "MATCH" : "MISMATCH");
        }
        if (options.timings) out += " (" + format_ms(e.wall_time_ms) + " ms)";
        out += "\n";
      }
      return out;
    }
  }
  return {};
}

std::string homology_json(const std::string& family, int scale, Coefficients coeff,
                          const std::vector<std::uint64_t>& betti, int complete_through,
                          std::optional<std::int64_t> chi) {
  json j;
  j["family"] = family;
  j["scale"] = scale;
  j["coeff"] = coeff == Coefficients::Z2 ? "z2" : "int";
  j["betti"] = betti;
  j["complete_through"] = complete_through;
  j["chi"] = chi ? json(*chi) : json(nullptr);
  return j.dump();
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw Error("unknown format '" + name + "' (expected json, csv or text)");
}

}  // namespace vrlat
