#include "vrlat/homology.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace vrlat {

namespace {

// out = a XOR b for sorted index lists.
void xor_into(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
              std::vector<std::uint32_t>& out) {
  out.clear();
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

void check_built(const Complex& k, int dim) {
  if (dim > k.max_dim() && !k.is_complete())
    throw Error("dimension " + std::to_string(dim) + " not built (complex built through " +
                std::to_string(k.max_dim()) + ")");
}

}  // namespace

SparseBoundaryMatrix boundary_matrix(const Complex& k, int dim) {
  if (dim < 1) throw Error("boundary dimension must be at least 1");
  check_built(k, dim);
  SparseBoundaryMatrix m;
  m.dim = dim;
  m.rows = k.count(dim - 1);
  const std::size_t n = k.count(dim);
  m.cols.resize(n);
  Simplex face;
  for (std::size_t j = 0; j < n; ++j) {
    auto s = k.simplex(dim, j);
    auto& col = m.cols[j];
    col.reserve(s.size());
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      face.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) face.push_back(s[i]);
      const auto idx = k.find(face);
      if (!idx) throw Error("complex is not closed under faces");
      col.push_back(static_cast<std::uint32_t>(*idx));
    }
    std::sort(col.begin(), col.end());
  }
  return m;
}

std::size_t rank_z2(const SparseBoundaryMatrix& m, const std::vector<bool>* cleared_columns,
                    std::vector<std::uint32_t>* pivot_rows, const Budget& budget) {
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> pivot_of_row(m.rows, kNone);
  std::vector<std::vector<std::uint32_t>> reduced;
  std::vector<std::uint32_t> work, scratch;
  for (std::size_t j = 0; j < m.cols.size(); ++j) {
    if (cleared_columns && (*cleared_columns)[j]) continue;
    if ((j & 1023) == 0 && budget.expired())
      throw BudgetExceeded("time budget exceeded while reducing boundary of dimension " +
                               std::to_string(m.dim), m.dim - 1);
    work = m.cols[j];
    while (!work.empty()) {
      const std::uint32_t low = work.back();
      const std::uint32_t p = pivot_of_row[low];
      if (p == kNone) {
        pivot_of_row[low] = static_cast<std::uint32_t>(reduced.size());
        reduced.push_back(work);
        if (pivot_rows) pivot_rows->push_back(low);
        break;
      }
      xor_into(work, reduced[p], scratch);
      work.swap(scratch);
    }
  }
  return reduced.size();
}

BettiVector betti_z2(const Complex& k, int through, ReductionMode mode, const Budget& budget) {
  BettiVector b;
  b.coeff = Coefficients::Z2;
  b.complete_through = k.is_complete() ? through : std::min(through, k.max_dim() - 1);
  if (b.complete_through < 0) {
    b.complete_through = -1;
    return b;
  }
  // rank[d] = rank of ∂_d over Z/2; ∂_0 is the augmentation.
  const int top = std::min(b.complete_through + 1, k.max_dim());
  std::vector<std::size_t> rank(static_cast<std::size_t>(b.complete_through) + 2, 0);
  rank[0] = k.count(0) > 0 ? 1 : 0;

  if (mode == ReductionMode::Sequential) {
    std::vector<std::uint32_t> pivots;
    for (int d = top; d >= 1; --d) {
      std::vector<bool> cleared(k.count(d), false);
      for (auto row : pivots) cleared[row] = true;
      pivots.clear();
      const auto m = boundary_matrix(k, d);
      rank[static_cast<std::size_t>(d)] = rank_z2(m, &cleared, &pivots, budget);
    }
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(std::max(top, 0)) + 1);
    for (int d = 1; d <= top; ++d)
      pool.emplace_back([&, d] {
        try {
          rank[static_cast<std::size_t>(d)] = rank_z2(boundary_matrix(k, d), nullptr, nullptr, budget);
        } catch (...) {
          errors[static_cast<std::size_t>(d)] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (int d = 0; d <= b.complete_through; ++d) {
    const auto n = static_cast<std::int64_t>(k.count(d));
    const auto value = n - static_cast<std::int64_t>(rank[static_cast<std::size_t>(d)]) -
                       static_cast<std::int64_t>(rank[static_cast<std::size_t>(d) + 1]);
    // Only the empty complex can go negative (its reduced H_{-1} is Z/2).
    b.values.push_back(static_cast<std::uint64_t>(std::max<std::int64_t>(value, 0)));
  }
  return b;
}

std::int64_t euler_characteristic(const Complex& k) {
  if (!k.is_complete())
    throw Error("Euler characteristic refused: complex truncated at dimension " +
                std::to_string(k.max_dim()));
  std::int64_t chi = 0;
  for (int d = 0; d <= k.max_dim(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(k.count(d));
  return chi;
}

}  // namespace vrlat
