#include "vrlat/complex.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "vrlat/error.hpp"

namespace vrlat {

namespace {

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void check_vertex(const Complex& k, Vertex v) {
  if (!k.has_vertex(v)) throw Error("unknown vertex " + std::to_string(v));
}

// Keeps the simplices of k accepted by keep; the result inherits k's family,
// scale, dimension budget and completeness.
template <typename Pred>
Complex filter(const Complex& k, Pred keep, bool complete) {
  std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(std::max(k.max_dim(), 0) + 1));
  if (k.max_dim() < 0) by_dim.clear();
  for (int d = 0; d <= k.max_dim(); ++d) {
    for (std::size_t i = 0; i < k.count(d); ++i) {
      auto s = k.simplex(d, i);
      if (keep(s)) by_dim[static_cast<std::size_t>(d)].emplace_back(s.begin(), s.end());
    }
  }
  return Complex::from_simplices(k.family(), k.scale(), k.max_dim(), std::move(by_dim), complete);
}

Simplex with_vertex(std::span<const Vertex> s, Vertex v) {
  Simplex out(s.begin(), s.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

bool in_star(const Complex& k, std::span<const Vertex> s, Vertex v) {
  if (std::binary_search(s.begin(), s.end(), v)) return true;
  return k.contains(with_vertex(s, v));
}

}  // namespace

Complex Complex::from_sorted_flat(SetFamily family, int scale, int max_dim,
                                  std::vector<std::vector<Vertex>> flat, bool complete) {
  if (static_cast<int>(flat.size()) != max_dim + 1) throw Error("simplex lists do not match max_dim");
  Complex k;
  k.family_ = std::move(family);
  k.scale_ = scale;
  k.max_dim_ = max_dim;
  k.complete_ = complete;
  k.flat_ = std::move(flat);
  return k;
}

Complex Complex::from_simplices(SetFamily family, int scale, int max_dim,
                                std::vector<std::vector<Simplex>> by_dim, bool complete) {
  if (max_dim < -1) throw Error("negative dimension");
  if (static_cast<int>(by_dim.size()) > max_dim + 1)
    throw Error("simplex lists exceed max_dim");
  by_dim.resize(static_cast<std::size_t>(max_dim + 1));
  Complex k;
  k.family_ = std::move(family);
  k.scale_ = scale;
  k.max_dim_ = max_dim;
  k.complete_ = complete;
  k.flat_.resize(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d) {
    auto& list = by_dim[d];
    for (const auto& s : list) {
      if (s.size() != d + 1) throw Error("simplex in wrong dimension list");
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] >= k.family_.size()) throw Error("vertex index out of range");
        if (j > 0 && s[j - 1] >= s[j]) throw Error("simplex vertices not strictly increasing");
      }
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    auto& flat = k.flat_[d];
    flat.reserve(list.size() * (d + 1));
    for (const auto& s : list) flat.insert(flat.end(), s.begin(), s.end());
  }
  return k;
}

std::size_t Complex::count(int dim) const {
  if (dim < 0 || dim > max_dim_) return 0;
  return flat_[static_cast<std::size_t>(dim)].size() / (static_cast<std::size_t>(dim) + 1);
}

std::size_t Complex::total() const {
  std::size_t t = 0;
  for (int d = 0; d <= max_dim_; ++d) t += count(d);
  return t;
}

std::vector<std::size_t> Complex::f_vector() const {
  std::vector<std::size_t> f;
  for (int d = 0; d <= max_dim_; ++d) f.push_back(count(d));
  return f;
}

int Complex::top_dim() const {
  for (int d = max_dim_; d >= 0; --d)
    if (count(d) > 0) return d;
  return -1;
}

std::optional<std::size_t> Complex::find(std::span<const Vertex> verts) const {
  if (verts.empty()) return std::nullopt;
  const int dim = static_cast<int>(verts.size()) - 1;
  if (dim > max_dim_) return std::nullopt;
  std::size_t lo = 0, hi = count(dim);
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (lex_less(simplex(dim, mid), verts)) lo = mid + 1;
    else hi = mid;
  }
  if (lo < count(dim) && std::ranges::equal(simplex(dim, lo), verts)) return lo;
  return std::nullopt;
}

std::vector<Vertex> Complex::vertices() const {
  if (max_dim_ < 0) return {};
  return flat_[0];
}

bool Complex::has_vertex(Vertex v) const {
  const Vertex s[] = {v};
  return contains(s);
}

bool Complex::has_edge(Vertex u, Vertex v) const {
  if (u == v) return false;
  const Vertex s[] = {std::min(u, v), std::max(u, v)};
  return contains(s);
}

std::vector<std::vector<Simplex>> Complex::simplices() const {
  std::vector<std::vector<Simplex>> out(static_cast<std::size_t>(max_dim_ + 1));
  for (int d = 0; d <= max_dim_; ++d)
    for (std::size_t i = 0; i < count(d); ++i) {
      auto s = simplex(d, i);
      out[static_cast<std::size_t>(d)].emplace_back(s.begin(), s.end());
    }
  return out;
}

bool Complex::is_closed_under_faces() const {
  Simplex face;
  for (int d = 1; d <= max_dim_; ++d)
    for (std::size_t i = 0; i < count(d); ++i) {
      auto s = simplex(d, i);
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        face.clear();
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != skip) face.push_back(s[j]);
        if (!contains(face)) return false;
      }
    }
  return true;
}

DistanceGraph distance_graph(const SetFamily& f, int r) {
  DistanceGraph g;
  g.size = f.size();
  g.neighbors.assign(g.size, VertexSet(g.size));
  for (std::size_t u = 0; u < g.size; ++u)
    for (std::size_t v = u + 1; v < g.size; ++v)
      if (dist(f[u], f[v]) <= r) {
        g.neighbors[u].set(v);
        g.neighbors[v].set(u);
      }
  return g;
}

Complex build_flag(const SetFamily& f, int r, int max_dim, const Budget& budget,
                   unsigned threads) {
  if (f.empty()) throw Error("empty family");
  if (max_dim < 0) throw Error("max_dim must be non-negative");
  if (r < 0) throw Error("scale must be non-negative");
  threads = std::max(1u, threads);

  const auto graph = distance_graph(f, r);
  const std::size_t n = graph.size;
  std::vector<VertexSet> upper(n, VertexSet(n));
  for (std::size_t v = 0; v < n; ++v) {
    upper[v] = graph.neighbors[v];
    for (std::size_t u = 0; u <= v; ++u) upper[v].reset(u);
  }

  std::vector<std::vector<Vertex>> levels(1);
  levels[0].resize(n);
  for (std::size_t v = 0; v < n; ++v) levels[0][v] = static_cast<Vertex>(v);
  std::atomic<std::size_t> total{n};
  if (n > budget.max_simplices)
    throw BudgetExceeded("simplex budget exceeded while building dimension 0", -1);

  auto candidates = [&](std::span<const Vertex> s) {
    VertexSet c = upper[s[0]];
    for (std::size_t j = 1; j < s.size(); ++j) c &= upper[s[j]];
    return c;
  };

  for (int d = 0; d < max_dim; ++d) {
    const auto& parents = levels[static_cast<std::size_t>(d)];
    const std::size_t stride = static_cast<std::size_t>(d) + 1;
    const std::size_t count = parents.size() / stride;
    const std::size_t chunks = std::min<std::size_t>(threads, std::max<std::size_t>(count, 1));
    std::vector<std::vector<Vertex>> parts(chunks);
    std::atomic<bool> over_budget{false};
    std::atomic<bool> timed_out{false};

    auto work = [&](std::size_t chunk) {
      const std::size_t begin = count * chunk / chunks;
      const std::size_t end = count * (chunk + 1) / chunks;
      auto& out = parts[chunk];
      for (std::size_t i = begin; i < end; ++i) {
        if (over_budget.load(std::memory_order_relaxed) || timed_out.load(std::memory_order_relaxed)) return;
        if ((i & 1023) == 0 && budget.expired()) { timed_out = true; return; }
        std::span<const Vertex> s(parents.data() + i * stride, stride);
        std::size_t added = 0;
        candidates(s).for_each([&](std::size_t w) {
          out.insert(out.end(), s.begin(), s.end());
          out.push_back(static_cast<Vertex>(w));
          ++added;
        });
        if (total.fetch_add(added) + added > budget.max_simplices) { over_budget = true; return; }
      }
    };

    if (chunks == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t c = 0; c < chunks; ++c) pool.emplace_back(work, c);
      for (auto& t : pool) t.join();
    }
    if (over_budget)
      throw BudgetExceeded("simplex budget exceeded while building dimension " +
                               std::to_string(d + 1), d);
    if (timed_out)
      throw BudgetExceeded("time budget exceeded while building dimension " +
                               std::to_string(d + 1), d);

    std::vector<Vertex> next;
    std::size_t size = 0;
    for (const auto& p : parts) size += p.size();
    next.reserve(size);
    for (auto& p : parts) next.insert(next.end(), p.begin(), p.end());
    levels.push_back(std::move(next));
  }

  bool complete = true;
  {
    const auto& top = levels.back();
    const std::size_t stride = static_cast<std::size_t>(max_dim) + 1;
    for (std::size_t i = 0; complete && i < top.size() / stride; ++i)
      if (!candidates(std::span<const Vertex>(top.data() + i * stride, stride)).none())
        complete = false;
  }

  return Complex::from_sorted_flat(f, r, max_dim, std::move(levels), complete);
}

}  // namespace vrlat

namespace vrlat {

Complex star(const Complex& k, Vertex v) {
  check_vertex(k, v);
  return filter(k, [&](std::span<const Vertex> s) { return in_star(k, s, v); }, k.is_complete());
}

Complex link(const Complex& k, Vertex v) {
  check_vertex(k, v);
  return filter(
      k,
      [&](std::span<const Vertex> s) {
        return !std::binary_search(s.begin(), s.end(), v) && k.contains(with_vertex(s, v));
      },
      k.is_complete());
}

Complex star_cluster(const Complex& k, std::span<const Vertex> l_vertices) {
  for (Vertex v : l_vertices) check_vertex(k, v);
  return filter(
      k,
      [&](std::span<const Vertex> s) {
        return std::ranges::any_of(l_vertices, [&](Vertex v) { return in_star(k, s, v); });
      },
      k.is_complete());
}

Complex induced_subcomplex(const Complex& k, std::span<const Vertex> vertices) {
  VertexSet keep(k.family().size());
  for (Vertex v : vertices) {
    check_vertex(k, v);
    keep.set(v);
  }
  return filter(
      k, [&](std::span<const Vertex> s) { return std::ranges::all_of(s, [&](Vertex v) { return keep.test(v); }); },
      k.is_complete());
}

Complex skeleton(const Complex& k, int d) {
  if (d < 0) throw Error("negative skeleton dimension");
  if (d > k.max_dim())
    throw Error("skeleton dimension " + std::to_string(d) + " exceeds built dimension " +
                std::to_string(k.max_dim()) + "; rebuild required");
  auto by_dim = k.simplices();
  by_dim.resize(static_cast<std::size_t>(d) + 1);
  // The d-skeleton is a complex in its own right with nothing above d.
  return Complex::from_simplices(k.family(), k.scale(), d, std::move(by_dim), true);
}

std::optional<Vertex> is_cone(const Complex& k) {
  const auto verts = k.vertices();
  if (verts.empty()) return std::nullopt;
  std::vector<std::size_t> degree(k.family().size(), 0);
  for (std::size_t i = 0; i < k.count(1); ++i) {
    auto e = k.simplex(1, i);
    ++degree[e[0]];
    ++degree[e[1]];
  }
  for (Vertex v : verts)
    if (degree[v] + 1 == verts.size()) return v;
  return std::nullopt;
}

StarClusterCheck sc_hypothesis_check(const Complex& k, std::span<const Vertex> l_vertices) {
  const std::size_t n = k.family().size();
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (std::size_t i = 0; i < k.count(1); ++i) {
    auto e = k.simplex(1, i);
    adj[e[0]].set(e[1]);
    adj[e[1]].set(e[0]);
  }
  VertexSet in_l(n);
  for (Vertex v : l_vertices) {
    check_vertex(k, v);
    in_l.set(v);
  }
  std::vector<Vertex> members;
  in_l.for_each([&](std::size_t v) { members.push_back(static_cast<Vertex>(v)); });

  // A simplex outside the full subcomplex L has a vertex u outside L, and {u}
  // alone then lies in both stars. So it suffices to look for a common
  // neighbour outside L of each non-adjacent pair.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Vertex v = members[i], w = members[j];
      if (adj[v].test(w)) continue;
      VertexSet common = adj[v] & adj[w];
      common.subtract(in_l);
      if (!common.none()) return {false, std::pair{v, w}};
    }
  return {};
}

std::string format_simplex_dump(const SetFamily& f, int scale, std::string_view spec,
                                std::span<const Simplex> simplices) {
  std::string out = "m=" + std::to_string(f.ground_size()) + " scale=" + std::to_string(scale) +
                    " family=" + std::string(spec) + "\n";
  std::vector<Simplex> sorted(simplices.begin(), simplices.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& s : sorted) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j) out += ' ';
      out += f[s[j]].to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace vrlat
