#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vrlat/budget.hpp"
#include "vrlat/setfam.hpp"
#include "vrlat/vertex_set.hpp"

namespace vrlat {

using Vertex = std::uint32_t;

// Strictly increasing vertex indices into a SetFamily.
using Simplex = std::vector<Vertex>;

// A finite simplicial complex over the vertices of a SetFamily, stored as one
// lexicographically sorted array of vertex tuples per dimension 0..max_dim.
//
// max_dim is the dimension the complex was built through. A complex is
// complete when it is known to have no simplices above max_dim; only then are
// Euler characteristic and top-dimensional Betti numbers meaningful.
class Complex {
 public:
  Complex() = default;

  // Builds a complex from per-dimension simplex lists. Each list is sorted and
  // deduplicated; closure under faces is the caller's responsibility.
  static Complex from_simplices(SetFamily family, int scale, int max_dim,
                                std::vector<std::vector<Simplex>> by_dim,
                                bool complete);
  // Same, from flattened per-dimension arrays that are already sorted and
  // duplicate-free.
  static Complex from_sorted_flat(SetFamily family, int scale, int max_dim,
                                  std::vector<std::vector<Vertex>> flat, bool complete);

  const SetFamily& family() const noexcept { return family_; }
  int scale() const noexcept { return scale_; }
  int max_dim() const noexcept { return max_dim_; }
  bool is_complete() const noexcept { return complete_; }

  // Number of simplices of the given dimension (0 outside [0, max_dim]).
  std::size_t count(int dim) const;
  std::size_t total() const;
  // Simplex counts for dimensions 0..max_dim.
  std::vector<std::size_t> f_vector() const;
  // Largest dimension with at least one simplex; -1 for the empty complex.
  int top_dim() const;

  std::span<const Vertex> simplex(int dim, std::size_t i) const {
    const auto stride = static_cast<std::size_t>(dim) + 1;
    return {flat_[static_cast<std::size_t>(dim)].data() + i * stride, stride};
  }

  // Index of the simplex within its dimension.
  std::optional<std::size_t> find(std::span<const Vertex> verts) const;
  bool contains(std::span<const Vertex> verts) const { return find(verts).has_value(); }

  // Vertex indices that appear as 0-simplices.
  std::vector<Vertex> vertices() const;
  bool has_vertex(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  // Per-dimension simplex lists (copies), for comparisons and dumps.
  std::vector<std::vector<Simplex>> simplices() const;

  // True iff every face of every stored simplex is stored.
  bool is_closed_under_faces() const;

 private:
  SetFamily family_;
  int scale_ = 0;
  int max_dim_ = -1;
  bool complete_ = true;
  std::vector<std::vector<Vertex>> flat_;
};

// 1-skeleton of the Vietoris–Rips complex: u ~ v iff dist(u, v) <= r.
struct DistanceGraph {
  std::size_t size = 0;
  std::vector<VertexSet> neighbors;

  bool adjacent(Vertex u, Vertex v) const { return neighbors[u].test(v); }
};

DistanceGraph distance_graph(const SetFamily& f, int r);

// All simplices of dimension <= max_dim of VR(f, r), built dimension by
// dimension by extending each simplex with its higher-indexed common
// neighbours. Throws BudgetExceeded naming the last completed dimension.
// With threads > 1 each level is extended in parallel chunks; output is
// identical for every thread count.
Complex build_flag(const SetFamily& f, int r, int max_dim,
                   const Budget& budget = Budget::unlimited(), unsigned threads = 1);

// Facets of VR(f, r) by Bron–Kerbosch with pivoting over a degeneracy
// ordering. Each facet is sorted; the list is sorted lexicographically.
std::vector<Simplex> maximal_simplices_bk(
    const SetFamily& f, int r,
    const std::function<void(std::size_t)>& progress = {});

// N[C] = {A in F_n^m : C ⊂ A} for |C| = n-1, as vertex indices of gen_uniform(m, n).
Simplex n_type_simplex(int m, int n, const Subset& c);
// L[S] = {S \ {i} : i in S} for |S| = n+1, as vertex indices of gen_uniform(m, n).
Simplex l_type_simplex(int m, int n, const Subset& s);

// All N-type and L-type simplices of VR(F_n^m, 2), sorted. For n >= 2 and
// m >= n+2 these are exactly the facets. Requires 1 < n < m.
std::vector<Simplex> maximal_simplices_closed_form(int m, int n);

// {σ : σ ∪ {v} ∈ k}
Complex star(const Complex& k, Vertex v);
// Simplices of the star that avoid v.
Complex link(const Complex& k, Vertex v);
// Union of the stars of the given vertices.
Complex star_cluster(const Complex& k, std::span<const Vertex> l_vertices);
// Full subcomplex spanned by the given vertices.
Complex induced_subcomplex(const Complex& k, std::span<const Vertex> vertices);
Complex skeleton(const Complex& k, int d);

// A vertex adjacent to every other vertex, if any; for a flag complex this is
// a cone apex.
std::optional<Vertex> is_cone(const Complex& k);

struct StarClusterCheck {
  bool holds = true;
  // A pair v, w in L whose stars share a simplex outside L although {v, w}
  // is not an edge.
  std::optional<std::pair<Vertex, Vertex>> violation;
};

// Checks the hypothesis of the star-cluster homotopy lemma for the full
// subcomplex L of k spanned by l_vertices.
StarClusterCheck sc_hypothesis_check(const Complex& k, std::span<const Vertex> l_vertices);

// Header line `m=<m> scale=<r> family=<spec>` followed by one simplex per line
// as space-separated vertex subsets.
std::string format_simplex_dump(const SetFamily& f, int scale, std::string_view spec,
                                std::span<const Simplex> simplices);

}  // namespace vrlat
