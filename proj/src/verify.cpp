#include "vrlat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "vrlat/complex.hpp"
#include "vrlat/family_spec.hpp"

namespace vrlat {

namespace {

std::string fam(int m, int n) { return "F(" + std::to_string(m) + "," + std::to_string(n) + ")"; }
std::string args(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

// Zeros in dimensions 0..max_dim-1 except `value` in dimension `sphere_dim`.
std::vector<Count> wedge_profile(int max_dim, int sphere_dim, Count value) {
  std::vector<Count> v(static_cast<std::size_t>(std::max(max_dim, 0)), 0);
  if (sphere_dim >= 0 && sphere_dim < max_dim) v[static_cast<std::size_t>(sphere_dim)] = value;
  return v;
}

void append(std::vector<Instance>& out, Suite suite, int m_max, std::optional<int> max_dim) {
  const int d2 = max_dim.value_or(3);
  const int d3 = max_dim.value_or(4);
  switch (suite) {
    case Suite::Uniform:
      for (int m = 4; m <= m_max; ++m)
        for (int n = 2; n <= m - 2; ++n)
          out.push_back({fam(m, n), 2, d2, wedge_profile(d2, 2, uniform_betti2(m, n)),
                         "uniform_betti2" + args(m, n)});
      break;
    case Suite::Adjacent:
      for (int m = 4; m <= m_max; ++m)
        for (int n = 2; n <= m - 2; ++n)
          out.push_back({fam(m, n) + "+" + fam(m, n + 1), 2, d2,
                         wedge_profile(d2, 2, adjacent_pair_betti2(m, n)), "adjacent_pair_betti2" + args(m, n)});
      break;
    case Suite::Skip:
      for (int m = 4; m <= m_max; ++m)
        for (int n = 1; n <= m - 3; ++n)
          out.push_back({fam(m, n) + "+" + fam(m, n + 2), 2, d3,
                         wedge_profile(d3, 3, skip_pair_betti3(m, n)), "skip_pair_betti3" + args(m, n)});
      break;
    case Suite::Prefix:
      for (int m = 3; m <= m_max; ++m)
        for (const auto layer = gen_power(m); const auto& a : layer.vertices()) {
          const std::string spec = "prefix(" + std::to_string(m) + ";" + a.to_string() + ")";
          out.push_back({spec, 2, d3, wedge_profile(d3, 3, prefix_betti3(m, a)),
                         "prefix_betti3(" + std::to_string(m) + "," + a.to_string() + ")"});
        }
      break;
    case Suite::Power:
      for (int m = 3; m <= m_max; ++m)
        out.push_back({"power(" + std::to_string(m) + ")", 2, d3, wedge_profile(d3, 3, c_of(m)),
                       "c_of(" + std::to_string(m) + ")"});
      break;
    case Suite::All:
      for (Suite s : {Suite::Uniform, Suite::Adjacent, Suite::Skip, Suite::Prefix, Suite::Power})
        append(out, s, m_max, max_dim);
      break;
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "uniform") return Suite::Uniform;
  if (name == "adjacent") return Suite::Adjacent;
  if (name == "skip") return Suite::Skip;
  if (name == "prefix") return Suite::Prefix;
  if (name == "power") return Suite::Power;
  if (name == "all") return Suite::All;
  throw Error("unknown suite '" + name + "'");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Uniform: return "uniform";
    case Suite::Adjacent: return "adjacent";
    case Suite::Skip: return "skip";
    case Suite::Prefix: return "prefix";
    case Suite::Power: return "power";
    case Suite::All: return "all";
  }
  return "all";
}

std::vector<Instance> suite_instances(Suite suite, int m_max, std::optional<int> max_dim) {
  if (m_max > kMaxGroundSize) throw Error("m_max exceeds " + std::to_string(kMaxGroundSize));
  std::vector<Instance> out;
  append(out, suite, m_max, max_dim);
  return out;
}

ReportEntry run_instance(const Instance& instance, std::chrono::milliseconds time_budget,
                         std::size_t max_simplices) {
  ReportEntry e;
  e.spec = instance.spec;
  e.scale = instance.scale;
  e.max_dim = instance.max_dim;
  e.oracle = instance.oracle;
  e.oracle_name = instance.oracle_name;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto budget = Budget::with_time_limit(time_budget, max_simplices);
    const auto family = materialize(parse_family_spec(instance.spec));
    const auto k = build_flag(family, instance.scale, instance.max_dim, budget);
    e.f_vector = k.f_vector();
    e.betti = betti_z2(k, instance.max_dim - 1, ReductionMode::Sequential, budget);
    if (k.is_complete()) e.chi = euler_characteristic(k);
    e.match = e.betti->values == instance.oracle;
  } catch (const BudgetExceeded& ex) {
    e.status = EntryStatus::Skipped;
    e.reason = ex.what();
  } catch (const std::exception& ex) {
    e.status = EntryStatus::Error;
    e.reason = ex.what();
  }
  e.wall_time_ms = elapsed_ms(start);
  return e;
}

Report run_verify(Suite suite, const VerifyOptions& options) {
  Report report;
  report.suite = suite_name(suite);
  const auto instances = suite_instances(suite, options.m_max, options.max_dim);
  report.entries.resize(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++)
      report.entries[i] = run_instance(instances[i], options.time_budget, options.max_simplices);
  };
  const unsigned threads =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(std::max<std::size_t>(instances.size(), 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return report;
}

ReportEntry run_three_layer_check(int m, int n) {
  if (!(m >= 4 && 1 <= n && n < m - 3)) throw Error("three-layer check requires m >= 4 and 1 <= n < m - 3");
  const auto start = std::chrono::steady_clock::now();
  constexpr int kMaxDim = 4;
  auto betti_of = [&](const std::vector<SetFamily>& parts) {
    const auto k = build_flag(gen_union(parts), 2, kMaxDim);
    return std::pair{betti_z2(k, kMaxDim - 1), k.f_vector()};
  };
  const auto [three, f3] = betti_of({gen_uniform(m, n), gen_uniform(m, n + 1), gen_uniform(m, n + 2)});
  const auto [two, f2] = betti_of({gen_uniform(m, n), gen_uniform(m, n + 2)});
  ReportEntry e;
  e.spec = fam(m, n) + "+" + fam(m, n + 1) + "+" + fam(m, n + 2);
  e.scale = 2;
  e.max_dim = kMaxDim;
  e.f_vector = f3;
  e.betti = three;
  e.oracle = two.values;
  e.oracle_name = "betti(" + fam(m, n) + "+" + fam(m, n + 2) + ")";
  e.match = three.values == two.values;
  e.wall_time_ms = elapsed_ms(start);
  return e;
}

unsigned worker_threads_from_env() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("VRLAT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) n = static_cast<unsigned>(v);
  }
  return n;
}

}  // namespace vrlat
