#include "vrlat/formulas.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <map>

#include "vrlat/error.hpp"

namespace vrlat {

namespace {

constexpr int kTableSize = 64;

const std::array<std::array<Count, kTableSize + 1>, kTableSize + 1>& pascal() {
  static const auto table = [] {
    std::array<std::array<Count, kTableSize + 1>, kTableSize + 1> t{};
    for (int n = 0; n <= kTableSize; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) throw Error("formula overflow");
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("formula overflow");
  return out;
}

// Every formula accumulates through this. Ranges with hi < lo contribute
// nothing.
class Summation {
 public:
  void add(std::string label, Count value) {
    eval_.value = checked_add(eval_.value, value);
    eval_.terms.push_back({std::move(label), value});
  }

  template <typename F>
  void add_range(int lo, int hi, F&& term) {
    for (int i = lo; i <= hi; ++i) {
      auto [label, value] = term(i);
      add(std::move(label), value);
    }
  }

  Evaluation finish() && { return std::move(eval_); }

 private:
  Evaluation eval_;
};

std::string c2(int k) { return "C(" + std::to_string(k) + ",2)"; }

Evaluation gap_formula(const Subset& a, bool shifted) {
  const int n = a.size();
  if (n < 3) throw Error(shifted ? "s_A defined for |A| >= 3" : "r_A defined for |A| >= 3");
  const auto gaps = gap_vector(a);
  const auto& g = shifted ? gaps.c : gaps.d;
  const char* name = shifted ? "c" : "d";
  Summation sum;
  sum.add_range(2, n - 2, [](int k) { return std::pair{c2(k), binomial(k, 2)}; });
  sum.add_range(1, n - 2, [&](int l) {
    const auto gap = static_cast<Count>(g[static_cast<std::size_t>(l - 1)]);
    return std::pair{std::string(name) + std::to_string(l) + "=" + std::to_string(gap) + " * " + c2(n - l),
                     checked_mul(gap, binomial(n - l, 2))};
  });
  return std::move(sum).finish();
}

void require_uniform_regime(int m, int n) {
  if (!(1 < n && n < m - 1)) throw Error("contractible regime");
}

int parse_int(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw Error("expected integer argument, got '" + s + "'");
  return v;
}

}  // namespace

Count binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > kTableSize) throw Error("binomial table limited to n <= 64");
  return pascal()[n][k];
}

GapVector gap_vector(const Subset& a) {
  GapVector g;
  int prev = -1;
  for (int i : a.elements()) {
    g.d.push_back(i - (prev + 1));
    g.c.push_back(g.c.empty() ? i - 1 : i - (prev + 1));
    prev = i;
  }
  return g;
}

Evaluation r_terms(const Subset& a) { return gap_formula(a, false); }
Evaluation s_terms(const Subset& a) { return gap_formula(a, true); }

Evaluation t_terms(int m, int n) {
  if (n < 3) throw Error("t_n defined for n >= 3");
  Summation sum;
  for (const auto layer = gen_uniform(m, n); const auto& a : layer.vertices()) sum.add("r" + a.to_string(), r_of(a));
  return std::move(sum).finish();
}

Evaluation c_terms(int m) {
  if (m < 3) throw Error("c_m defined for m >= 3");
  if (m > kTableSize) throw Error("c_m limited to m <= 64");
  Summation sum;
  for (int i = 1; i < m; ++i)
    sum.add_range(0, i - 1, [&](int j) {
      const Count diff = (Count{1} << (m - 2)) - (Count{1} << (i - 1));
      return std::pair{"(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
                       checked_mul(static_cast<Count>(j + 1), diff)};
    });
  return std::move(sum).finish();
}

Evaluation uniform_betti2_terms(int m, int n) {
  require_uniform_regime(m, n);
  Summation sum;
  sum.add_range(2, n, [&](int k) {
    const int top = m + k - 1 - n;
    return std::pair{"C(" + std::to_string(top) + "," + std::to_string(k + 1) + ") * " + c2(k),
                     checked_mul(binomial(top, k + 1), binomial(k, 2))};
  });
  return std::move(sum).finish();
}

Evaluation adjacent_pair_betti2_terms(int m, int n) {
  require_uniform_regime(m, n);
  Summation sum;
  sum.add("uniform_betti2(" + std::to_string(m) + "," + std::to_string(n) + ")", uniform_betti2(m, n));
  sum.add("C(" + std::to_string(m) + "," + std::to_string(n + 2) + ") * " + c2(n + 1),
          checked_mul(binomial(m, n + 2), binomial(n + 1, 2)));
  return std::move(sum).finish();
}

Evaluation prefix_betti3_terms(int m, const Subset& a) {
  if (a.ground_size() != m) throw Error("ground-set mismatch");
  Summation sum;
  if (a.size() < 3) return std::move(sum).finish();
  for (int k = 3; k <= a.size(); ++k)
    for (const auto layer = gen_uniform(m, k); const auto& b : layer.vertices()) {
      if (order_cmp(b, a) > 0) break;
      sum.add("r" + b.to_string(), r_of(b));
    }
  return std::move(sum).finish();
}

Evaluation leq_betti3_terms(int m, int n) {
  if (n > m) throw Error("empty parameter range");
  Summation sum;
  sum.add_range(3, n, [&](int k) { return std::pair{"t" + std::to_string(k), t_of(m, k)}; });
  return std::move(sum).finish();
}

Evaluation o_terms(int m, int n) {
  if (n < 2 || n + 2 > m) throw Error("o_{m,n} requires n >= 2 and n + 2 <= m");
  Summation sum;
  for (const auto layer = gen_uniform(m, n + 2); const auto& a : layer.vertices())
    if (a.min_element() >= 2) sum.add("s" + a.to_string(), s_of(a));
  return std::move(sum).finish();
}

Evaluation skip_pair_betti3_terms(int m, int n) {
  Summation sum;
  if (n == 0) return std::move(sum).finish();
  if (!(1 <= n && n <= m - 3)) throw Error("skip-pair formula requires 1 <= n <= m - 3");
  sum.add_range(2, n, [&](int k) {
    const int mm = m + k - n;
    return std::pair{"o(" + std::to_string(mm) + "," + std::to_string(k) + ")", o_of(mm, k)};
  });
  sum.add("C(" + std::to_string(m + 1 - n) + ",4)", binomial(m + 1 - n, 4));
  return std::move(sum).finish();
}

Evaluation cross_polytope_sphere_dim_terms(int m, int n) {
  if (n < 1 || m != 2 * n) throw Error("cross-polytope case requires m = 2n with n >= 1");
  Summation sum;
  sum.add("C(" + std::to_string(m) + "," + std::to_string(n) + ")/2 - 1", binomial(m, n) / 2 - 1);
  return std::move(sum).finish();
}

Count r_of(const Subset& a) { return r_terms(a).value; }
Count s_of(const Subset& a) { return s_terms(a).value; }
Count t_of(int m, int n) { return t_terms(m, n).value; }
Count c_of(int m) { return c_terms(m).value; }
Count uniform_betti2(int m, int n) { return uniform_betti2_terms(m, n).value; }
Count adjacent_pair_betti2(int m, int n) { return adjacent_pair_betti2_terms(m, n).value; }
Count prefix_betti3(int m, const Subset& a) { return prefix_betti3_terms(m, a).value; }
Count leq_betti3(int m, int n) { return leq_betti3_terms(m, n).value; }
Count o_of(int m, int n) { return o_terms(m, n).value; }
Count skip_pair_betti3(int m, int n) { return skip_pair_betti3_terms(m, n).value; }
Count cross_polytope_sphere_dim(int m, int n) { return cross_polytope_sphere_dim_terms(m, n).value; }

namespace {

using Args = std::span<const std::string>;

struct FormulaEntry {
  std::string usage;
  std::function<Evaluation(Args)> eval;
};

const std::map<std::string, FormulaEntry, std::less<>>& registry() {
  static const std::map<std::string, FormulaEntry, std::less<>> table = [] {
    auto two_ints = [](auto fn) {
      return [fn](Args a) { return fn(parse_int(a[0]), parse_int(a[1])); };
    };
    auto subset_arg = [](auto fn) {
      return [fn](Args a) { return fn(parse_subset(parse_int(a[0]), a[1])); };
    };
    std::map<std::string, FormulaEntry, std::less<>> t;
    t["r_of"] = {"<m> <set>", subset_arg(r_terms)};
    t["s_of"] = {"<m> <set>", subset_arg(s_terms)};
    t["t_of"] = {"<m> <n>", two_ints(t_terms)};
    t["c_of"] = {"<m>", [](Args a) { return c_terms(parse_int(a[0])); }};
    t["uniform_betti2"] = {"<m> <n>", two_ints(uniform_betti2_terms)};
    t["adjacent_pair_betti2"] = {"<m> <n>", two_ints(adjacent_pair_betti2_terms)};
    t["prefix_betti3"] = {"<m> <set>", [](Args a) {
                            const int m = parse_int(a[0]);
                            return prefix_betti3_terms(m, parse_subset(m, a[1]));
                          }};
    t["leq_betti3"] = {"<m> <n>", two_ints(leq_betti3_terms)};
    t["o_of"] = {"<m> <n>", two_ints(o_terms)};
    t["skip_pair_betti3"] = {"<m> <n>", two_ints(skip_pair_betti3_terms)};
    t["cross_polytope_sphere_dim"] = {"<m> <n>", two_ints(cross_polytope_sphere_dim_terms)};
    return t;
  }();
  return table;
}

std::size_t arity(const std::string& usage) {
  return static_cast<std::size_t>(std::count(usage.begin(), usage.end(), '<'));
}

}  // namespace

std::vector<std::string> formula_names() {
  std::vector<std::string> out;
  for (const auto& [name, entry] : registry()) out.push_back(name);
  return out;
}

Evaluation evaluate_formula(std::string_view name, std::span<const std::string> args) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error("unknown formula '" + std::string(name) + "'");
  if (args.size() != arity(it->second.usage))
    throw Error("formula " + it->first + " expects arguments " + it->second.usage);
  return it->second.eval(args);
}

}  // namespace vrlat
