#include "vrlat/setfam.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "vrlat/error.hpp"

namespace vrlat {

namespace {

std::uint64_t ground_mask(int m) {
  return m >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
}

void check_ground_size(int m) {
  if (m < 0 || m > kMaxGroundSize)
    throw Error("ground-set size " + std::to_string(m) + " outside [0, " +
                std::to_string(kMaxGroundSize) + "]");
}

void check_same_ground(const Subset& a, const Subset& b) {
  if (a.ground_size() != b.ground_size()) throw Error("ground-set mismatch");
}

// Gosper's hack: next larger word with the same popcount.
std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

Subset::Subset(int m, std::uint64_t bits) : bits_(bits), m_(m) {
  check_ground_size(m);
  if ((bits & ~ground_mask(m)) != 0)
    throw Error("subset has elements outside [" + std::to_string(m) + "]");
}

Subset Subset::full(int m) {
  check_ground_size(m);
  return Subset(m, ground_mask(m));
}

Subset Subset::from_elements(int m, std::span<const int> elements) {
  check_ground_size(m);
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > m)
      throw Error("element " + std::to_string(e) + " outside [" +
                  std::to_string(m) + "]");
    bits |= std::uint64_t{1} << (e - 1);
  }
  return Subset(m, bits);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t w = bits_; w != 0; w &= w - 1)
    out.push_back(__builtin_ctzll(w) + 1);
  return out;
}

Subset Subset::complement() const { return Subset(m_, ~bits_ & ground_mask(m_)); }

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

Subset parse_subset(int m, std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const char* expected) -> Subset {
    throw Error("subset syntax error at offset " + std::to_string(pos) +
                ": expected " + expected);
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '{') return fail("'{'");
  ++pos;
  std::vector<int> elems;
  skip_ws();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    for (;;) {
      skip_ws();
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc()) return fail("integer");
      pos = static_cast<std::size_t>(ptr - text.data());
      elems.push_back(value);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
      if (pos < text.size() && text[pos] == '}') { ++pos; break; }
      return fail("',' or '}'");
    }
  }
  skip_ws();
  if (pos != text.size()) return fail("end of input");
  return Subset::from_elements(m, elems);
}

int dist(const Subset& a, const Subset& b) {
  check_same_ground(a, b);
  return __builtin_popcountll(a.bits() ^ b.bits());
}

std::strong_ordering order_cmp(const Subset& a, const Subset& b) {
  check_same_ground(a, b);
  if (a.size() != b.size()) return a.size() <=> b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return std::strong_ordering::equal;
  // Below the smallest differing element both lists agree, so the set that
  // holds that element has the smaller entry at the first disagreement.
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.bits() & lowest) ? std::strong_ordering::less
                             : std::strong_ordering::greater;
}

SetFamily::SetFamily(int m, std::vector<Subset> vertices)
    : m_(m), vertices_(std::move(vertices)) {
  check_ground_size(m);
  for (const auto& v : vertices_)
    if (v.ground_size() != m) throw Error("ground-set mismatch");
  std::sort(vertices_.begin(), vertices_.end(), OrderLess{});
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

std::optional<std::size_t> SetFamily::index_of(const Subset& s) const {
  if (s.ground_size() != m_) return std::nullopt;
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), s, OrderLess{});
  if (it == vertices_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

SetFamily gen_uniform(int m, int n) {
  check_ground_size(m);
  if (n < 0 || n > m) throw Error("empty parameter range");
  std::vector<Subset> out;
  if (n == 0) {
    out.push_back(Subset::empty(m));
  } else {
    const std::uint64_t last = ground_mask(m) & ~ground_mask(m - n);
    for (std::uint64_t w = ground_mask(n);; w = next_same_popcount(w)) {
      out.emplace_back(m, w);
      if (w == last) break;
    }
  }
  return SetFamily(m, std::move(out));
}

SetFamily gen_prefix(int m, const Subset& a) {
  if (a.ground_size() != m) throw Error("ground-set mismatch");
  std::vector<Subset> out;
  for (int k = 0; k < a.size(); ++k) {
    auto layer = gen_uniform(m, k);
    out.insert(out.end(), layer.vertices().begin(), layer.vertices().end());
  }
  for (const auto layer = gen_uniform(m, a.size()); const auto& b : layer.vertices()) {
    if (order_cmp(b, a) > 0) break;
    out.push_back(b);
  }
  return SetFamily(m, std::move(out));
}

SetFamily gen_power(int m) { return gen_upto(m, m); }

SetFamily gen_upto(int m, int n) {
  check_ground_size(m);
  if (n < 0 || n > m) throw Error("empty parameter range");
  std::vector<Subset> out;
  for (int k = 0; k <= n; ++k) {
    auto layer = gen_uniform(m, k);
    out.insert(out.end(), layer.vertices().begin(), layer.vertices().end());
  }
  return SetFamily(m, std::move(out));
}

SetFamily gen_union(std::span<const SetFamily> parts) {
  if (parts.empty()) throw Error("union of zero families");
  const int m = parts.front().ground_size();
  std::vector<Subset> out;
  for (const auto& p : parts) {
    if (p.ground_size() != m) throw Error("ground-set mismatch");
    out.insert(out.end(), p.vertices().begin(), p.vertices().end());
  }
  return SetFamily(m, std::move(out));
}

SetFamily complement_map(const SetFamily& f) {
  std::vector<Subset> out;
  out.reserve(f.size());
  for (const auto& v : f.vertices()) out.push_back(v.complement());
  return SetFamily(f.ground_size(), std::move(out));
}

Subset delete_element(const Subset& s, int a) {
  const int m = s.ground_size();
  if (a < 1 || a > m) throw Error("element " + std::to_string(a) + " out of range");
  const std::uint64_t low = s.bits() & ground_mask(a - 1);
  const std::uint64_t high = (s.bits() >> a) << (a - 1);
  return Subset(m - 1, low | high);
}

FixedElementSubfamily fix_element_subfamily(int m, int n, int a) {
  if (a < 1 || a > m) throw Error("element " + std::to_string(a) + " out of range");
  if (n < 1 || n > m) throw Error("empty parameter range");
  std::vector<Subset> members;
  std::vector<Subset> images;
  for (const auto layer = gen_uniform(m, n); const auto& s : layer.vertices()) {
    if (!s.contains(a)) continue;
    members.push_back(s);
    images.push_back(delete_element(s, a));
  }
  FixedElementSubfamily out;
  out.family = SetFamily(m, std::move(members));
  out.relabeled = SetFamily(m - 1, std::move(images));
  out.element = a;
  return out;
}

}  // namespace vrlat
