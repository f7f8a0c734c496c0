#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vrlat/setfam.hpp"

namespace vrlat {

using Count = std::uint64_t;

// Exact binomial coefficient from a Pascal table; 0 when k < 0 or k > n.
Count binomial(int n, int k);

// Gaps of A = i_1 < ... < i_n. With i_0 = -1, d_l = i_l - (i_{l-1} + 1), so
// d_1 = i_1. The c-gaps differ only in the first entry: c_1 = i_1 - 1.
struct GapVector {
  std::vector<int> d;
  std::vector<int> c;
};

GapVector gap_vector(const Subset& a);

struct Term {
  std::string label;
  Count value = 0;
};

// A formula value with the terms that produced it.
struct Evaluation {
  Count value = 0;
  std::vector<Term> terms;
};

// Sum of C(k,2) for k in [2, n-2] plus sum of d_l * C(n-l, 2) for l in [1, n-2].
Count r_of(const Subset& a);
// As r_of with c-gaps; r_of(a) == s_of(a) + C(n-1, 2).
Count s_of(const Subset& a);
// Sum of r over all n-subsets of [m].
Count t_of(int m, int n);
// sum over 0 <= j < i < m of (j+1)(2^(m-2) - 2^(i-1)).
Count c_of(int m);

Count uniform_betti2(int m, int n);
Count adjacent_pair_betti2(int m, int n);
Count prefix_betti3(int m, const Subset& a);
Count leq_betti3(int m, int n);
Count o_of(int m, int n);
Count skip_pair_betti3(int m, int n);
Count cross_polytope_sphere_dim(int m, int n);

Evaluation r_terms(const Subset& a);
Evaluation s_terms(const Subset& a);
Evaluation t_terms(int m, int n);
Evaluation c_terms(int m);
Evaluation uniform_betti2_terms(int m, int n);
Evaluation adjacent_pair_betti2_terms(int m, int n);
Evaluation prefix_betti3_terms(int m, const Subset& a);
Evaluation leq_betti3_terms(int m, int n);
Evaluation o_terms(int m, int n);
Evaluation skip_pair_betti3_terms(int m, int n);
Evaluation cross_polytope_sphere_dim_terms(int m, int n);

// Names accepted by evaluate_formula.
std::vector<std::string> formula_names();

// Evaluates a formula by name from textual arguments, e.g.
// ("uniform_betti2", {"6", "3"}) or ("r_of", {"5", "{1,2,3}"}).
// Subset arguments are preceded by the ground size m.
Evaluation evaluate_formula(std::string_view name, std::span<const std::string> args);

}  // namespace vrlat
