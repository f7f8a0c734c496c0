#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vrlat {

inline constexpr int kMaxGroundSize = 63;

// A subset of the ground set [m] = {1, ..., m}, stored as a single word.
// Element i lives in bit i-1.
class Subset {
 public:
  Subset() = default;
  Subset(int m, std::uint64_t bits);

  static Subset empty(int m) { return Subset(m, 0); }
  static Subset full(int m);
  static Subset from_elements(int m, std::span<const int> elements);

  int ground_size() const noexcept { return m_; }
  std::uint64_t bits() const noexcept { return bits_; }
  int size() const noexcept { return __builtin_popcountll(bits_); }
  bool contains(int element) const noexcept {
    return element >= 1 && element <= m_ && ((bits_ >> (element - 1)) & 1u);
  }
  int min_element() const noexcept {
    return bits_ == 0 ? 0 : __builtin_ctzll(bits_) + 1;
  }

  // Sorted ascending.
  std::vector<int> elements() const;

  Subset complement() const;
  bool is_subset_of(const Subset& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  // "{1,3,5}", "{}" for the empty set.
  std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::uint64_t bits_ = 0;
  int m_ = 0;
};

// Parses the brace serialization produced by Subset::to_string.
Subset parse_subset(int m, std::string_view text);

// Symmetric-difference distance |a Δ b|.
int dist(const Subset& a, const Subset& b);

// The total order used to index vertices: cardinality first, then the sorted
// element lists compared position by position.
std::strong_ordering order_cmp(const Subset& a, const Subset& b);

struct OrderLess {
  bool operator()(const Subset& a, const Subset& b) const {
    return order_cmp(a, b) < 0;
  }
};

// A finite family of subsets of [m], kept sorted under order_cmp with no
// duplicates. A vertex's index is its position in that order.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(int m, std::vector<Subset> vertices);

  int ground_size() const noexcept { return m_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  std::span<const Subset> vertices() const noexcept { return vertices_; }
  const Subset& operator[](std::size_t i) const { return vertices_[i]; }

  std::optional<std::size_t> index_of(const Subset& s) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int m_ = 0;
  std::vector<Subset> vertices_;
};

// All n-subsets of [m].
SetFamily gen_uniform(int m, int n);
// All B ⊆ [m] with B ≼ a, including the empty set.
SetFamily gen_prefix(int m, const Subset& a);
// The full power set of [m].
SetFamily gen_power(int m);
// All subsets of [m] of cardinality at most n.
SetFamily gen_upto(int m, int n);
// Deduplicated merge; all parts must share m.
SetFamily gen_union(std::span<const SetFamily> parts);

// Image under A -> [m] \ A, an isometry of the symmetric-difference metric.
SetFamily complement_map(const SetFamily& f);

// Removes element a from s and shifts larger elements down by one, giving a
// subset of [m-1].
Subset delete_element(const Subset& s, int a);

// The n-subsets of [m] containing a, together with their images in the
// n-1 layer of [m-1] under delete_element. The two families are index-aligned.
struct FixedElementSubfamily {
  SetFamily family;
  SetFamily relabeled;
  int element = 0;
};

FixedElementSubfamily fix_element_subfamily(int m, int n, int a);

}  // namespace vrlat
