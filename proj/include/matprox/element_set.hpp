// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATPROX_ELEMENT_SET_HPP
#define MATPROX_ELEMENT_SET_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace matprox {

/// Largest supported ground set. One machine word per subset.
inline constexpr int kMaxElements = 64;

/// A subset of a ground set {0, ..., n-1}, n <= 64, stored as a bitmask.
class ElementSet {
 public:
  using Mask = std::uint64_t;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(Mask rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Mask bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<int> ids) {
    for (int e : ids) bits_ |= bit(e);
  }

  static ElementSet from_ids(std::span<const int> ids) {
    ElementSet s;
    for (int e : ids) {
      if (e < 0 || e >= kMaxElements) {
        throw std::out_of_range("element id " + std::to_string(e) +
                                " outside [0, 64)");
      }
      s.bits_ |= bit(e);
    }
    return s;
  }

  /// {0, ..., n-1}.
  static constexpr ElementSet range(int n) {
    return ElementSet(n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Smallest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  /// Largest member; undefined on the empty set.
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  constexpr ElementSet with(int e) const { return ElementSet(bits_ | bit(e)); }
  constexpr ElementSet without(int e) const {
    return ElementSet(bits_ & ~bit(e));
  }

  std::vector<int> ids() const {
    std::vector<int> out;
    out.reserve(size());
    for (int e : *this) out.push_back(e);
    return out;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ ^ b.bits_);
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  /// Numeric order of the masks. For equal-size sets this is colex order.
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  static constexpr Mask bit(int e) { return Mask{1} << e; }

  Mask bits_ = 0;
};

/// Lexicographic order of the ascending id lists. A proper prefix sorts first.
constexpr bool lex_less(ElementSet a, ElementSet b) {
  const ElementSet::Mask diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const ElementSet::Mask low = diff & (~diff + 1);
  // Below the first differing element x the lists agree. The list holding x
  // is smaller unless the other list has already ended there.
  if (a.bits() & low) return (b.bits() & ~(low - 1)) != 0;
  return (a.bits() & ~(low - 1)) == 0;
}

struct LexLess {
  constexpr bool operator()(ElementSet a, ElementSet b) const {
    return lex_less(a, b);
  }
};

/// "{0,3,5}".
inline std::string to_string(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : s) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

/// Space separated ids, as used by the text file formats.
inline std::string to_id_list(ElementSet s, char sep = ' ') {
  std::string out;
  for (int e : s) {
    if (!out.empty()) out += sep;
    out += std::to_string(e);
  }
  return out;
}

/// Parses ids separated by commas and/or whitespace; optional braces.
/// Accepts "0,2,5", "0 2 5", "{0,2,5}" and "{}".
inline std::vector<int> parse_id_list(std::string_view text) {
  std::vector<int> ids;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '{' || c == '}';
  };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    const std::string token(text.substr(i, j - i));
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad element id '" + token + "'");
    }
    if (used != token.size()) {
      throw std::invalid_argument("bad element id '" + token + "'");
    }
    ids.push_back(value);
    i = j;
  }
  return ids;
}

// ---------------------------------------------------------------------------
// Binomial coefficients and fixed-size subset enumeration.

namespace detail {

inline constexpr auto kBinomials = [] {
  std::array<std::array<std::uint64_t, 65>, 65> table{};
  for (int n = 0; n <= 64; ++n) {
    table[n][0] = 1;
    for (int k = 1; k <= n; ++k) {
      // Saturate instead of overflowing; callers only rely on small values.
      const std::uint64_t a = table[n - 1][k - 1];
      const std::uint64_t b = k <= n - 1 ? table[n - 1][k] : 0;
      table[n][k] = (a > UINT64_MAX - b) ? UINT64_MAX : a + b;
    }
  }
  return table;
}();

}  // namespace detail

/// C(n, k), saturating at UINT64_MAX. Zero when k < 0 or k > n.
constexpr std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > 64) return 0;
  return detail::kBinomials[n][k];
}

/// Calls f(ElementSet) for every k-subset of {0..n-1} in colex order
/// (increasing mask value). f may return bool; returning false stops early.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  using Mask = ElementSet::Mask;
  if (k == 0) {
    f(ElementSet{});
    return;
  }
  const Mask limit = ElementSet::range(n).bits();
  Mask s = (k == 64) ? ~Mask{0} : (Mask{1} << k) - 1;
  while (true) {
    if constexpr (std::is_same_v<decltype(f(ElementSet{})), bool>) {
      if (!f(ElementSet(s))) return;
    } else {
      f(ElementSet(s));
    }
    // Gosper's hack.
    const Mask c = s & (~s + 1);
    const Mask r = s + c;
    if (r == 0) return;
    const Mask next = (((r ^ s) >> 2) / c) | r;
    if ((next & ~limit) != 0) return;
    s = next;
  }
}

/// All k-subsets of {0..n-1}, colex order.
inline std::vector<ElementSet> all_subsets(int n, int k) {
  std::vector<ElementSet> out;
  out.reserve(binomial(n, k));
  for_each_subset(n, k, [&](ElementSet s) { out.push_back(s); });
  return out;
}

}  // namespace matprox

#endif  // MATPROX_ELEMENT_SET_HPP
