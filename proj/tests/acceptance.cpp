// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any gating criterion fails. Pass --stretch to also run the integer
// homology of F(7,3) at scale 4, which is not gating.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "vrlat/complex.hpp"
#include "vrlat/formulas.hpp"
#include "vrlat/homology.hpp"
#include "vrlat/setfam.hpp"
#include "vrlat/verify.hpp"

using namespace vrlat;
using Clock = std::chrono::steady_clock;
using U = std::vector<std::uint64_t>;

namespace {

// Per-criterion wall-clock limits in seconds (0 means none). Betti
// comparisons are exact.
constexpr double kBarmakPerInstance = 5.0;
constexpr double kUniformSuite = 120.0;
constexpr double kAdjacentSuite = 120.0;
constexpr double kSkipSuite = 120.0;
constexpr double kPrefixSuite = 120.0;
constexpr double kPowerM5 = 120.0;
constexpr double kIdentities = 1.0;
constexpr double kFacets = 60.0;
constexpr double kCrossPolytope = 300.0;
constexpr double kThreeLayer = 60.0;
constexpr double kStarCluster = 60.0;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string show(const U& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// Reduced Betti vector 0..through with `value` in dimension `dim`.
U profile(int through, int dim, std::uint64_t value) {
  U v(static_cast<std::size_t>(through) + 1, 0);
  if (dim <= through) v[static_cast<std::size_t>(dim)] = value;
  return v;
}

U betti(const SetFamily& f, int r, int through, unsigned threads) {
  const auto k = build_flag(f, r, through + 1, Budget::unlimited(), threads);
  return betti_z2(k, through).values;
}

SetFamily layers(int m, std::initializer_list<int> ns) {
  std::vector<SetFamily> parts;
  for (int n : ns) parts.push_back(gen_uniform(m, n));
  return gen_union(parts);
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

struct Runner {
  int failures = 0;
  void run(const std::string& id, const std::string& title, double limit_s,
           const std::function<Outcome()>& body, bool gating = true) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double took = seconds_since(t0);
    if (o.pass && limit_s > 0 && took > limit_s) o.fail("time limit exceeded");
    if (!o.pass && gating) ++failures;
    const std::string limit = limit_s > 0 ? std::to_string(static_cast<int>(limit_s)) + "s" : "none";
    std::printf("%s criterion %s: %s [%.2fs, limit %s]%s%s\n", o.pass ? "PASS" : "FAIL", id.c_str(),
                title.c_str(), took, limit.c_str(), o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
  }
};

}  // namespace

int main(int argc, char** argv) {
  bool stretch = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--stretch") == 0) stretch = true;
  const unsigned threads = worker_threads_from_env();
  Runner runner;

  runner.run("1", "Barmak layer F(m,2), m=4..7, reduced Betti (0,0,C(m-1,3))", kBarmakPerInstance * 4, [&] {
    Outcome o;
    for (int m = 4; m <= 7; ++m) {
      const auto t0 = Clock::now();
      const auto got = betti(gen_uniform(m, 2), 2, 2, threads);
      const auto want = profile(2, 2, binomial(m - 1, 3));
      if (got != want) o.fail("m=" + std::to_string(m) + " got " + show(got) + " want " + show(want));
      if (seconds_since(t0) > kBarmakPerInstance) o.fail("m=" + std::to_string(m) + " over per-instance limit");
    }
    return o;
  });

  runner.run("2", "uniform layers F(m,n), 1<n<m-1, m<=7, match uniform_betti2 with (6,3)->19 and (7,3)->55",
             kUniformSuite, [&] {
               Outcome o;
               if (uniform_betti2(6, 3) != 19) o.fail("uniform_betti2(6,3) != 19");
               if (uniform_betti2(7, 3) != 55) o.fail("uniform_betti2(7,3) != 55");
               for (int m = 4; m <= 7; ++m)
                 for (int n = 2; n <= m - 2; ++n) {
                   const auto got = betti(gen_uniform(m, n), 2, 3, threads);
                   const auto want = profile(3, 2, uniform_betti2(m, n));
                   if (got != want)
                     o.fail("F(" + std::to_string(m) + "," + std::to_string(n) + ") got " + show(got) +
                            " want " + show(want));
                 }
               return o;
             });

  runner.run("3", "adjacent pairs F(m,n)+F(m,n+1), 1<n<m-1, m<=6, match adjacent_pair_betti2 with (5,2)->19",
             kAdjacentSuite, [&] {
               Outcome o;
               if (adjacent_pair_betti2(5, 2) != 19) o.fail("adjacent_pair_betti2(5,2) != 19");
               for (int m = 4; m <= 6; ++m)
                 for (int n = 2; n <= m - 2; ++n) {
                   const auto got = betti(layers(m, {n, n + 1}), 2, 3, threads);
                   const auto want = profile(3, 2, adjacent_pair_betti2(m, n));
                   if (got != want)
                     o.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + " got " + show(got) +
                            " want " + show(want));
                 }
               return o;
             });

  runner.run("4", "skip pairs F(m,n)+F(m,n+2), m<=6, match skip_pair_betti3 with (5,1)->5 and (5,2)->5",
             kSkipSuite, [&] {
               Outcome o;
               if (skip_pair_betti3(5, 1) != 5 || skip_pair_betti3(5, 2) != 5) o.fail("formula spot values");
               for (int m = 4; m <= 6; ++m)
                 for (int n = 1; n <= m - 3; ++n) {
                   const auto got = betti(layers(m, {n, n + 2}), 2, 3, threads);
                   const auto want = profile(3, 3, skip_pair_betti3(m, n));
                   if (got != want)
                     o.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + " got " + show(got) +
                            " want " + show(want));
                 }
               return o;
             });

  runner.run("5", "prefix families m=4,5, every A: b3 = prefix_betti3 for |A|>=3, contractible otherwise",
             kPrefixSuite, [&] {
               Outcome o;
               if (prefix_betti3(5, Subset::from_elements(5, std::vector<int>{1, 2, 3})) != 1)
                 o.fail("prefix_betti3(5,{1,2,3}) != 1");
               for (int m = 4; m <= 5; ++m)
                 for (const auto all = gen_power(m); const auto& a : all.vertices()) {
                   const auto got = betti(gen_prefix(m, a), 2, 3, threads);
                   const auto want = profile(3, 3, a.size() >= 3 ? prefix_betti3(m, a) : 0);
                   if (got != want)
                     o.fail("m=" + std::to_string(m) + " A=" + a.to_string() + " got " + show(got) + " want " +
                            show(want));
                 }
               return o;
             });

  runner.run("6", "power sets m=3,4,5: b3 = c_of(m) = 1, 9, 49, other reduced Betti through dim 4 zero",
             kPowerM5, [&] {
               Outcome o;
               const U expect{1, 9, 49};
               for (int m = 3; m <= 5; ++m) {
                 if (c_of(m) != expect[static_cast<std::size_t>(m - 3)]) o.fail("c_of(" + std::to_string(m) + ")");
                 const auto got = betti(gen_power(m), 2, 4, threads);
                 const auto want = profile(4, 3, c_of(m));
                 if (got != want) o.fail("m=" + std::to_string(m) + " got " + show(got) + " want " + show(want));
               }
               return o;
             });

  runner.run("7", "identities: sum t_k = c_m for m<=12, r_A = s_A + C(n-1,2) on subsets of [10]", kIdentities, [] {
    Outcome o;
    for (int m = 3; m <= 12; ++m) {
      Count sum = 0;
      for (int k = 3; k <= m; ++k) sum += t_of(m, k);
      if (sum != c_of(m)) o.fail("m=" + std::to_string(m));
    }
    for (std::uint64_t w = 0; w < (1u << 10); ++w) {
      const Subset a(10, w);
      if (a.size() >= 3 && r_of(a) != s_of(a) + binomial(a.size() - 1, 2)) o.fail("A=" + a.to_string());
    }
    return o;
  });

  runner.run("8", "facets of F(m,n) at scale 2, 2<=n<=m-2, m<=7: closed form = enumeration, count C(m,n-1)+C(m,n+1)",
             kFacets, [] {
               Outcome o;
               for (int m = 4; m <= 7; ++m)
                 for (int n = 2; n <= m - 2; ++n) {
                   const auto closed = maximal_simplices_closed_form(m, n);
                   const auto enumerated = maximal_simplices_bk(gen_uniform(m, n), 2);
                   const std::string at = "m=" + std::to_string(m) + " n=" + std::to_string(n);
                   if (closed != enumerated) o.fail(at + " facet sets differ");
                   if (closed.size() != binomial(m, n - 1) + binomial(m, n + 1)) o.fail(at + " count");
                 }
               return o;
             });

  runner.run("9", "cross-polytopes: F(4,2) at scale 2 is S^2, F(6,3) at scale 4 has only b9 = 1 through dim 9",
             kCrossPolytope, [&] {
               Outcome o;
               const auto oct = betti(gen_uniform(4, 2), 2, 2, threads);
               if (oct != profile(2, cross_polytope_sphere_dim(4, 2), 1)) o.fail("F(4,2) got " + show(oct));
               const auto f = gen_uniform(6, 3);
               const auto k = build_flag(f, 4, 10, Budget::unlimited(), threads);
               const auto got = betti_z2(k, 9).values;
               if (got != profile(9, cross_polytope_sphere_dim(6, 3), 1)) o.fail("F(6,3) got " + show(got));
               if (f.size() != 20) o.fail("vertex count");
               return o;
             });

  runner.run("10", "three-layer collapse for (m,n) in {(5,1),(6,1),(6,2)}", kThreeLayer, [] {
    Outcome o;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{5, 1}, {6, 1}, {6, 2}}) {
      const auto e = run_three_layer_check(m, n);
      if (!e.match || !*e.match)
        o.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + " " + show(e.betti->values) + " vs " +
               show(U(e.oracle->begin(), e.oracle->end())));
    }
    return o;
  });

  runner.run("11", "star-cluster hypothesis holds for (5,2), (6,3), F(5,2)+F(5,3); fails for P([2]) at scale 1",
             kStarCluster, [] {
               Outcome o;
               auto holds = [](const SetFamily& f, int r, const std::function<bool(const Subset&)>& in_l) {
                 const auto k = build_flag(f, r, 3);
                 std::vector<Vertex> l;
                 for (Vertex v = 0; v < f.size(); ++v)
                   if (in_l(f[v])) l.push_back(v);
                 return sc_hypothesis_check(k, l);
               };
               auto has1 = [](const Subset& s) { return s.contains(1); };
               if (!holds(gen_uniform(5, 2), 2, has1).holds) o.fail("F(5,2)");
               if (!holds(gen_uniform(6, 3), 2, has1).holds) o.fail("F(6,3)");
               if (!holds(layers(5, {2, 3}), 2, [](const Subset& s) { return s.size() == 2; }).holds)
                 o.fail("F(5,2)+F(5,3)");
               const auto p2 = gen_power(2);
               const auto r = holds(p2, 1, [](const Subset& s) { return s.size() <= 1; });
               if (r.holds || !r.violation) {
                 o.fail("P([2]) not reported as violated");
               } else if (!(p2[r.violation->first] == Subset(2, 0b01) && p2[r.violation->second] == Subset(2, 0b10))) {
                 o.fail("P([2]) violation names the wrong pair");
               }
               return o;
             });

  if (stretch) {
    runner.run("12", "stretch: integer homology of F(7,3) at scale 4 is Z^29 in dim 6, Z^7 in dim 9, no torsion",
               0, [&] {
                 Outcome o;
                 const auto k = build_flag(gen_uniform(7, 3), 4, 10, Budget::unlimited(), threads);
                 const std::size_t guard = std::numeric_limits<std::size_t>::max();
                 const auto h6 = homology_integer(k, 6, guard);
                 const auto h9 = homology_integer(k, 9, guard);
                 if (h6.rank != 29 || !h6.torsion.empty()) o.fail("dim 6 rank " + std::to_string(h6.rank));
                 if (h9.rank != 7 || !h9.torsion.empty()) o.fail("dim 9 rank " + std::to_string(h9.rank));
                 return o;
               },
               false);
  } else {
    std::printf("SKIP criterion 12: stretch integer homology of F(7,3) at scale 4 (run with --stretch)\n");
  }

  std::printf("%s: %d gating criteria failed\n", runner.failures ? "FAILED" : "OK", runner.failures);
  return runner.failures ? 1 : 0;
}
