#include <algorithm>
#include <utility>

#include "vrlat/homology.hpp"

namespace vrlat {

namespace {

using Entry = std::pair<std::uint32_t, mpz_class>;
using IntColumn = std::vector<Entry>;  // sorted by row

struct IntMatrix {
  std::size_t rows = 0;
  std::vector<IntColumn> cols;
};

// Signed boundary: the face omitting position i gets sign (-1)^i.
IntMatrix signed_boundary(const Complex& k, int dim) {
  const auto z2 = boundary_matrix(k, dim);
  IntMatrix m;
  m.rows = z2.rows;
  m.cols.resize(z2.cols.size());
  Simplex face;
  for (std::size_t j = 0; j < z2.cols.size(); ++j) {
    auto s = k.simplex(dim, j);
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      face.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) face.push_back(s[i]);
      m.cols[j].emplace_back(static_cast<std::uint32_t>(*k.find(face)), skip % 2 == 0 ? 1 : -1);
    }
    std::sort(m.cols[j].begin(), m.cols[j].end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
  }
  return m;
}

const mpz_class* entry_at(const IntColumn& c, std::uint32_t row) {
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::uint32_t r) { return e.first < r; });
  return (it != c.end() && it->first == row) ? &it->second : nullptr;
}

// target -= factor * source
void axpy(IntColumn& target, const mpz_class& factor, const IntColumn& source) {
  IntColumn out;
  out.reserve(target.size() + source.size());
  std::size_t a = 0, b = 0;
  while (a < target.size() || b < source.size()) {
    if (b == source.size() || (a < target.size() && target[a].first < source[b].first)) {
      out.push_back(std::move(target[a++]));
    } else if (a == target.size() || source[b].first < target[a].first) {
      out.emplace_back(source[b].first, -factor * source[b].second);
      ++b;
    } else {
      mpz_class v = target[a].second - factor * source[b].second;
      if (v != 0) out.emplace_back(target[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  target.swap(out);
}

// Eliminates unit pivots with column operations only, removing each pivot's
// row and column. Returns the number of unit pivots; the surviving columns
// form a residue whose Smith form completes the diagonal.
std::size_t eliminate_unit_pivots(IntMatrix& m) {
  std::vector<std::vector<std::uint32_t>> row_cols(m.rows);
  for (std::size_t j = 0; j < m.cols.size(); ++j)
    for (const auto& e : m.cols[j]) row_cols[e.first].push_back(static_cast<std::uint32_t>(j));
  std::vector<bool> alive(m.cols.size(), true);
  std::size_t units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
      if (!alive[j] || m.cols[j].empty()) continue;
      // Unit entry whose row touches the fewest columns, to limit fill-in.
      const Entry* pivot = nullptr;
      for (const auto& e : m.cols[j])
        if (abs(e.second) == 1 && (!pivot || row_cols[e.first].size() < row_cols[pivot->first].size()))
          pivot = &e;
      if (!pivot) continue;
      const std::uint32_t row = pivot->first;
      const mpz_class sign = pivot->second;
      const IntColumn source = m.cols[j];
      for (std::uint32_t c : row_cols[row]) {
        if (c == j || !alive[c]) continue;
        const mpz_class* v = entry_at(m.cols[c], row);
        if (!v) continue;
        const mpz_class factor = *v * sign;  // sign is ±1, its own inverse
        const IntColumn before = m.cols[c];
        axpy(m.cols[c], factor, source);
        for (const auto& e : source)
          if (e.first != row && !entry_at(before, e.first) && entry_at(m.cols[c], e.first))
            row_cols[e.first].push_back(c);
      }
      alive[j] = false;
      m.cols[j].clear();
      row_cols[row].clear();
      ++units;
      progress = true;
    }
    for (auto& rc : row_cols) {
      std::sort(rc.begin(), rc.end());
      rc.erase(std::unique(rc.begin(), rc.end()), rc.end());
    }
  }
  return units;
}

// Smith form of a small dense matrix; returns the nonzero diagonal.
std::vector<mpz_class> dense_smith(std::vector<std::vector<mpz_class>> a) {
  std::vector<mpz_class> diag;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the submatrix; otherwise fold the
      // offending row into the pivot row and go again.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

SNFDiagonal smith_of(const IntMatrix& input, int dim) {
  IntMatrix m = input;
  SNFDiagonal out;
  out.dim = dim;
  const std::size_t units = eliminate_unit_pivots(m);
  out.diag.assign(units, mpz_class(1));

  std::vector<std::uint32_t> live_rows;
  std::vector<std::size_t> live_cols;
  for (std::size_t j = 0; j < m.cols.size(); ++j)
    if (!m.cols[j].empty()) {
      live_cols.push_back(j);
      for (const auto& e : m.cols[j]) live_rows.push_back(e.first);
    }
  std::sort(live_rows.begin(), live_rows.end());
  live_rows.erase(std::unique(live_rows.begin(), live_rows.end()), live_rows.end());
  if (live_cols.empty()) return out;

  std::vector<std::vector<mpz_class>> dense(live_rows.size(),
                                            std::vector<mpz_class>(live_cols.size(), 0));
  for (std::size_t c = 0; c < live_cols.size(); ++c)
    for (const auto& e : m.cols[live_cols[c]]) {
      const auto r = std::lower_bound(live_rows.begin(), live_rows.end(), e.first) - live_rows.begin();
      dense[static_cast<std::size_t>(r)][c] = e.second;
    }
  for (auto& d : dense_smith(std::move(dense))) out.diag.push_back(std::move(d));
  return out;
}

void guard(const Complex& k, int dim, std::size_t max_columns) {
  if (k.count(dim) > max_columns)
    throw SizeGuardExceeded(dim, k.count(dim - 1), k.count(dim), max_columns);
}

}  // namespace

SNFDiagonal smith_diagonal(const Complex& k, int dim, std::size_t max_columns) {
  if (dim < 1) throw Error("boundary dimension must be at least 1");
  guard(k, dim, max_columns);
  return smith_of(signed_boundary(k, dim), dim);
}

IntegerHomology homology_integer(const Complex& k, int dim, std::size_t max_columns) {
  if (dim < 0) throw Error("negative homology dimension");
  if (dim + 1 > k.max_dim() && !k.is_complete())
    throw Error("dimension " + std::to_string(dim + 1) + " not built (complex built through " +
                std::to_string(k.max_dim()) + ")");
  const std::size_t n = k.count(dim);
  std::size_t rank_below = 0;
  if (dim == 0) {
    rank_below = n > 0 ? 1 : 0;
  } else {
    rank_below = smith_diagonal(k, dim, max_columns).diag.size();
  }
  IntegerHomology h;
  std::size_t rank_above = 0;
  if (k.count(dim + 1) > 0) {
    const auto snf = smith_diagonal(k, dim + 1, max_columns);
    rank_above = snf.diag.size();
    for (const auto& d : snf.diag)
      if (d > 1) h.torsion.push_back(d);
  }
  h.rank = n >= rank_below + rank_above ? n - rank_below - rank_above : 0;
  return h;
}

}  // namespace vrlat
