#include <algorithm>

#include "vrlat/complex.hpp"
#include "vrlat/error.hpp"

namespace vrlat {

namespace {

class BronKerbosch {
 public:
  BronKerbosch(const DistanceGraph& g, const std::function<void(std::size_t)>& progress)
      : g_(g), progress_(progress) {}

  void expand(Simplex& clique, VertexSet candidates, VertexSet excluded) {
    if (candidates.none()) {
      if (excluded.none()) {
        Simplex facet = clique;
        std::sort(facet.begin(), facet.end());
        facets_.push_back(std::move(facet));
        if (progress_ && (facets_.size() & 0xFFF) == 0) progress_(facets_.size());
      }
      return;
    }
    // Tomita pivot: the vertex of P ∪ X with the most neighbours in P.
    std::size_t pivot = 0, best = 0;
    bool have_pivot = false;
    auto consider = [&](std::size_t u) {
      const std::size_t c = g_.neighbors[u].intersection_count(candidates);
      if (!have_pivot || c > best) {
        pivot = u;
        best = c;
        have_pivot = true;
      }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);

    VertexSet branch = candidates;
    branch.subtract(g_.neighbors[pivot]);
    branch.for_each([&](std::size_t v) {
      clique.push_back(static_cast<Vertex>(v));
      expand(clique, candidates & g_.neighbors[v], excluded & g_.neighbors[v]);
      clique.pop_back();
      candidates.reset(v);
      excluded.set(v);
    });
  }

  std::vector<Simplex> take() { return std::move(facets_); }

 private:
  const DistanceGraph& g_;
  const std::function<void(std::size_t)>& progress_;
  std::vector<Simplex> facets_;
};

// Repeatedly removes a minimum-degree vertex; ties go to the lowest index.
std::vector<Vertex> degeneracy_order(const DistanceGraph& g) {
  const std::size_t n = g.size;
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = g.neighbors[v].count();
  std::vector<bool> removed(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (best == n || degree[v] < degree[best])) best = v;
    removed[best] = true;
    order.push_back(static_cast<Vertex>(best));
    g.neighbors[best].for_each([&](std::size_t u) {
      if (!removed[u]) --degree[u];
    });
  }
  return order;
}

}  // namespace

std::vector<Simplex> maximal_simplices_bk(const SetFamily& f, int r,
                                          const std::function<void(std::size_t)>& progress) {
  if (f.empty()) throw Error("empty family");
  const auto g = distance_graph(f, r);
  BronKerbosch bk(g, progress);
  VertexSet later(g.size);
  for (std::size_t v = 0; v < g.size; ++v) later.set(v);
  VertexSet earlier(g.size);
  Simplex clique;
  for (Vertex v : degeneracy_order(g)) {
    later.reset(v);
    clique.assign(1, v);
    bk.expand(clique, later & g.neighbors[v], earlier & g.neighbors[v]);
    earlier.set(v);
  }
  auto facets = bk.take();
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return facets;
}

namespace {

Simplex n_type_in(const SetFamily& layer, int n, const Subset& c) {
  const int m = layer.ground_size();
  if (c.ground_size() != m || c.size() != n - 1) throw Error("N-type core must have n-1 elements");
  Simplex out;
  for (int x = 1; x <= m; ++x) {
    if (c.contains(x)) continue;
    out.push_back(static_cast<Vertex>(*layer.index_of(Subset(m, c.bits() | (std::uint64_t{1} << (x - 1))))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Simplex l_type_in(const SetFamily& layer, int n, const Subset& s) {
  const int m = layer.ground_size();
  if (s.ground_size() != m || s.size() != n + 1) throw Error("L-type support must have n+1 elements");
  Simplex out;
  for (int x : s.elements())
    out.push_back(static_cast<Vertex>(*layer.index_of(Subset(m, s.bits() & ~(std::uint64_t{1} << (x - 1))))));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Simplex n_type_simplex(int m, int n, const Subset& c) { return n_type_in(gen_uniform(m, n), n, c); }

Simplex l_type_simplex(int m, int n, const Subset& s) { return l_type_in(gen_uniform(m, n), n, s); }

std::vector<Simplex> maximal_simplices_closed_form(int m, int n) {
  if (!(1 < n && n < m)) throw Error("closed form not applicable");
  const auto layer = gen_uniform(m, n);
  const auto cores = gen_uniform(m, n - 1);
  const auto supports = gen_uniform(m, n + 1);
  std::vector<Simplex> out;
  for (const auto& c : cores.vertices()) out.push_back(n_type_in(layer, n, c));
  for (const auto& s : supports.vertices()) out.push_back(l_type_in(layer, n, s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace vrlat
