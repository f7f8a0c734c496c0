#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vrlat/budget.hpp"
#include "vrlat/complex.hpp"
#include "vrlat/error.hpp"

namespace vrlat {

enum class Coefficients { Z2, Z };

// Column j holds the sorted indices of the (dim-1)-faces of the j-th
// dim-simplex.
struct SparseBoundaryMatrix {
  int dim = 0;
  std::size_t rows = 0;
  std::vector<std::vector<std::uint32_t>> cols;
};

// Reduced Betti numbers b̃_0 .. b̃_complete_through. Dimensions above
// complete_through were not computable from the built skeleton and are
// absent rather than zero.
struct BettiVector {
  Coefficients coeff = Coefficients::Z2;
  std::vector<std::uint64_t> values;
  int complete_through = -1;

  std::uint64_t at(int dim) const { return values.at(static_cast<std::size_t>(dim)); }
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

// Nonzero diagonal of the Smith normal form of the integer boundary ∂_dim,
// in divisibility order.
struct SNFDiagonal {
  int dim = 0;
  std::vector<mpz_class> diag;
};

struct IntegerHomology {
  std::uint64_t rank = 0;
  std::vector<mpz_class> torsion;
};

// Refusal raised when exact integer elimination would exceed the size guard.
class SizeGuardExceeded : public Error {
 public:
  SizeGuardExceeded(int dim, std::size_t rows, std::size_t cols, std::size_t limit)
      : Error("integer homology refused: boundary matrix of dimension " + std::to_string(dim) +
              " is " + std::to_string(rows) + "x" + std::to_string(cols) + ", guard is " +
              std::to_string(limit) + " columns"),
        rows_(rows), cols_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
};

inline constexpr std::size_t kDefaultSnfColumnGuard = 20000;

enum class ReductionMode {
  // Top dimension down, clearing columns already known to be boundaries.
  Sequential,
  // Every boundary rank reduced independently on its own thread.
  ParallelByDimension,
};

SparseBoundaryMatrix boundary_matrix(const Complex& k, int dim);

// Rank over Z/2 by left-to-right column reduction. Columns flagged in
// `cleared_columns` are skipped; pivot rows are appended to `pivot_rows`.
std::size_t rank_z2(const SparseBoundaryMatrix& m, const std::vector<bool>* cleared_columns = nullptr,
                    std::vector<std::uint32_t>* pivot_rows = nullptr,
                    const Budget& budget = Budget::unlimited());

BettiVector betti_z2(const Complex& k, int through, ReductionMode mode = ReductionMode::Sequential,
                     const Budget& budget = Budget::unlimited());

SNFDiagonal smith_diagonal(const Complex& k, int dim,
                           std::size_t max_columns = kDefaultSnfColumnGuard);

IntegerHomology homology_integer(const Complex& k, int dim,
                                 std::size_t max_columns = kDefaultSnfColumnGuard);

// Alternating sum of the f-vector; refuses truncated complexes.
std::int64_t euler_characteristic(const Complex& k);

}  // namespace vrlat
