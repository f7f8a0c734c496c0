#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vrlat/error.hpp"
#include "vrlat/setfam.hpp"

namespace vrlat {

// F(m,n): all n-subsets of [m].
struct UniformTerm {
  int m = 0;
  int n = 0;
  friend bool operator==(const UniformTerm&, const UniformTerm&) = default;
};

// prefix(m;{...}): all subsets of [m] that are ≼ the given set.
struct PrefixTerm {
  int m = 0;
  Subset a;
  friend bool operator==(const PrefixTerm&, const PrefixTerm&) = default;
};

// power(m): every subset of [m].
struct PowerTerm {
  int m = 0;
  friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

// upto(m,n): subsets of [m] with at most n elements.
struct UpToTerm {
  int m = 0;
  int n = 0;
  friend bool operator==(const UpToTerm&, const UpToTerm&) = default;
};

using FamilyTerm = std::variant<UniformTerm, PrefixTerm, PowerTerm, UpToTerm>;

// Union of one or more terms over a common ground set.
struct FamilySpec {
  std::vector<FamilyTerm> terms;

  int ground_size() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

class SpecSyntaxError : public Error {
 public:
  SpecSyntaxError(std::size_t offset, const std::string& expected)
      : Error("family spec error at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset), expected_(expected) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

//   spec := term ('+' term)*
//   term := 'F(' m ',' n ')' | 'prefix(' m ';' set ')' | 'power(' m ')' | 'upto(' m ',' n ')'
//   set  := '{' ints '}'
// Whitespace between tokens is ignored.
FamilySpec parse_family_spec(std::string_view text);

// Canonical text form; parse_family_spec(to_string(s)) == s.
std::string to_string(const FamilySpec& spec);

SetFamily materialize(const FamilySpec& spec);

}  // namespace vrlat
