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

// Finite and integer abelian groups, group labelings of a ground set,
// forbidden label sets and partitions of the ground set into label classes.

#ifndef MATPROX_LABELS_HPP
#define MATPROX_LABELS_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matprox/element_set.hpp"

namespace matprox {

/// Product groups are flattened to at most this many cyclic/integer factors.
inline constexpr int kMaxGroupFactors = 8;

/// An element of an AbelianGroup: one normalized integer per factor.
class GroupElement {
 public:
  constexpr GroupElement() = default;

  static GroupElement scalar(std::int64_t v) {
    GroupElement g;
    g.size_ = 1;
    g.values_[0] = v;
    return g;
  }

  int size() const { return size_; }
  std::int64_t operator[](int i) const { return values_[i]; }
  std::int64_t& operator[](int i) { return values_[i]; }

  void resize(int n) {
    if (n < 0 || n > kMaxGroupFactors) {
      throw std::invalid_argument("too many group factors");
    }
    for (int i = size_; i < n; ++i) values_[i] = 0;
    size_ = static_cast<std::uint8_t>(n);
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    if (a.size_ != b.size_) return false;
    for (int i = 0; i < a.size_; ++i) {
      if (a.values_[i] != b.values_[i]) return false;
    }
    return true;
  }
  friend std::strong_ordering operator<=>(const GroupElement& a,
                                          const GroupElement& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    for (int i = 0; i < a.size_; ++i) {
      if (auto c = a.values_[i] <=> b.values_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::array<std::int64_t, kMaxGroupFactors> values_{};
  std::uint8_t size_ = 0;
};

/// Z, Z_m, or a finite direct product of those.
///
/// Internally every group is a list of factor moduli, where modulus 0 stands
/// for the integers. Nested products flatten, so prod(prod(Z2, Z3), Z) and
/// prod(Z2, Z3, Z) are the same group.
class AbelianGroup {
 public:
  enum class Kind { kCyclic, kIntegers, kProduct };

  static AbelianGroup cyclic(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("cyclic modulus must be >= 1");
    return AbelianGroup(Kind::kCyclic, {m});
  }
  static AbelianGroup integers() { return AbelianGroup(Kind::kIntegers, {0}); }
  static AbelianGroup product(const std::vector<AbelianGroup>& parts) {
    if (parts.empty()) {
      throw std::invalid_argument("product group needs at least one factor");
    }
    std::vector<std::int64_t> moduli;
    for (const auto& p : parts) {
      moduli.insert(moduli.end(), p.moduli_.begin(), p.moduli_.end());
    }
    if (moduli.size() > kMaxGroupFactors) {
      throw std::invalid_argument("product group has more than 8 factors");
    }
    return AbelianGroup(Kind::kProduct, std::move(moduli));
  }

  Kind kind() const { return kind_; }
  int factor_count() const { return static_cast<int>(moduli_.size()); }
  /// Modulus of factor i; 0 means Z.
  std::int64_t factor_modulus(int i) const { return moduli_[i]; }

  bool is_finite() const {
    return std::none_of(moduli_.begin(), moduli_.end(),
                        [](std::int64_t m) { return m == 0; });
  }

  /// |G|. Throws for infinite groups or when the order exceeds 2^62.
  std::uint64_t order() const {
    if (!is_finite()) throw std::domain_error("group is infinite");
    std::uint64_t o = 1;
    for (std::int64_t m : moduli_) {
      if (o > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(m)) {
        throw std::overflow_error("group order too large");
      }
      o *= static_cast<std::uint64_t>(m);
    }
    return o;
  }

  GroupElement zero() const {
    GroupElement g;
    g.resize(factor_count());
    return g;
  }

  bool contains(const GroupElement& g) const {
    if (g.size() != factor_count()) return false;
    for (int i = 0; i < factor_count(); ++i) {
      if (moduli_[i] != 0 && (g[i] < 0 || g[i] >= moduli_[i])) return false;
    }
    return true;
  }

  /// Builds an element from raw integers, reducing cyclic components.
  GroupElement make(const std::vector<std::int64_t>& raw) const {
    if (static_cast<int>(raw.size()) != factor_count()) {
      throw std::invalid_argument("element has " + std::to_string(raw.size()) +
                                  " components, group " + spec() + " has " +
                                  std::to_string(factor_count()));
    }
    GroupElement g;
    g.resize(factor_count());
    for (int i = 0; i < factor_count(); ++i) g[i] = reduce(raw[i], moduli_[i]);
    return g;
  }
  GroupElement make(std::int64_t raw) const {
    return make(std::vector<std::int64_t>{raw});
  }

  GroupElement add(const GroupElement& a, const GroupElement& b) const {
    GroupElement c;
    c.resize(factor_count());
    for (int i = 0; i < factor_count(); ++i) {
      const std::int64_t m = moduli_[i];
      if (m == 0) {
        if (__builtin_add_overflow(a[i], b[i], &c[i])) {
          throw std::overflow_error("integer label sum overflows int64");
        }
      } else {
        const std::int64_t s = a[i] + b[i];  // both in [0, m), m <= 2^62
        c[i] = s >= m ? s - m : s;
      }
    }
    return c;
  }

  GroupElement negate(const GroupElement& a) const {
    GroupElement c;
    c.resize(factor_count());
    for (int i = 0; i < factor_count(); ++i) {
      const std::int64_t m = moduli_[i];
      if (m == 0) {
        if (a[i] == INT64_MIN) {
          throw std::overflow_error("integer label negation overflows");
        }
        c[i] = -a[i];
      } else {
        c[i] = a[i] == 0 ? 0 : m - a[i];
      }
    }
    return c;
  }

  GroupElement subtract(const GroupElement& a, const GroupElement& b) const {
    return add(a, negate(b));
  }

  /// The i-th element of a finite group in mixed-radix order (factor 0 is the
  /// most significant digit).
  GroupElement element_at(std::uint64_t index) const {
    GroupElement g;
    g.resize(factor_count());
    for (int i = factor_count() - 1; i >= 0; --i) {
      const auto m = static_cast<std::uint64_t>(moduli_[i]);
      if (m == 0) throw std::domain_error("group is infinite");
      g[i] = static_cast<std::int64_t>(index % m);
      index /= m;
    }
    return g;
  }

  /// Text form: "Z", "Zm:<m>" or "prod:<spec>,<spec>,...".
  std::string spec() const {
    auto leaf = [](std::int64_t m) {
      return m == 0 ? std::string("Z") : "Zm:" + std::to_string(m);
    };
    if (kind_ != Kind::kProduct) return leaf(moduli_[0]);
    std::string out = "prod:";
    for (int i = 0; i < factor_count(); ++i) {
      if (i > 0) out += ',';
      out += leaf(moduli_[i]);
    }
    return out;
  }

  static AbelianGroup parse(std::string_view text) {
    auto leaf = [](std::string_view t) -> AbelianGroup {
      if (t == "Z") return integers();
      if (t.substr(0, 3) == "Zm:") {
        const std::string digits(t.substr(3));
        std::size_t used = 0;
        long long m = 0;
        try {
          m = std::stoll(digits, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == digits.size() && !digits.empty() && m >= 1) {
          return cyclic(m);
        }
      }
      throw std::invalid_argument("bad group spec '" + std::string(t) + "'");
    };
    if (text.substr(0, 5) == "prod:") {
      std::vector<AbelianGroup> parts;
      std::string_view rest = text.substr(5);
      while (true) {
        const auto comma = rest.find(',');
        parts.push_back(leaf(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      return product(parts);
    }
    return leaf(text);
  }

  /// "3" for single-factor groups, "1,0,4" for products.
  std::string format(const GroupElement& g) const {
    std::string out;
    for (int i = 0; i < g.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(g[i]);
    }
    return out;
  }

  /// Inverse of format(). Cyclic components are reduced, so "-1" in Z_4
  /// parses as 3.
  GroupElement parse_element(std::string_view text) const {
    std::vector<std::int64_t> raw;
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      const std::string token(text.substr(
          start, comma == std::string_view::npos ? comma : comma - start));
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = std::string::npos;
      }
      if (token.empty() || used != token.size()) {
        throw std::invalid_argument("bad group element '" + std::string(text) +
                                    "'");
      }
      raw.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return make(raw);
  }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.moduli_ == b.moduli_;
  }

 private:
  AbelianGroup(Kind kind, std::vector<std::int64_t> moduli)
      : kind_(kind), moduli_(std::move(moduli)) {}

  static std::int64_t reduce(std::int64_t v, std::int64_t m) {
    if (m == 0) return v;
    const std::int64_t r = v % m;
    return r < 0 ? r + m : r;
  }

  Kind kind_ = Kind::kIntegers;
  std::vector<std::int64_t> moduli_;
};

/// psi: E -> Gamma, stored densely by element id.
struct Labeling {
  AbelianGroup group = AbelianGroup::integers();
  std::vector<GroupElement> values;

  Labeling() = default;
  Labeling(AbelianGroup g, std::vector<GroupElement> v)
      : group(std::move(g)), values(std::move(v)) {
    for (std::size_t e = 0; e < values.size(); ++e) {
      if (!group.contains(values[e])) {
        throw std::invalid_argument("label of element " + std::to_string(e) +
                                    " is not in " + group.spec());
      }
    }
  }

  /// Convenience for single-factor groups: raw values, reduced mod m.
  static Labeling from_values(const AbelianGroup& g,
                              const std::vector<std::int64_t>& raw) {
    std::vector<GroupElement> v;
    v.reserve(raw.size());
    for (std::int64_t x : raw) v.push_back(g.make(x));
    return Labeling(g, std::move(v));
  }

  int size() const { return static_cast<int>(values.size()); }
  const GroupElement& operator[](int e) const { return values[e]; }
};

/// psi(X), the group sum of the labels in X. psi(empty) is the identity.
/// Integer overflow throws std::overflow_error.
inline GroupElement group_sum(const Labeling& psi, ElementSet x) {
  if (!x.empty() && x.max() >= psi.size()) {
    throw std::out_of_range("set " + to_string(x) +
                            " exceeds labeling of size " +
                            std::to_string(psi.size()));
  }
  GroupElement s = psi.group.zero();
  for (int e : x) s = psi.group.add(s, psi.values[e]);
  return s;
}

/// A finite set of forbidden labels, kept sorted and duplicate free.
class ForbiddenSet {
 public:
  explicit ForbiddenSet(AbelianGroup group) : group_(std::move(group)) {}
  ForbiddenSet(AbelianGroup group, std::vector<GroupElement> elements)
      : group_(std::move(group)), elements_(std::move(elements)) {
    for (const auto& g : elements_) {
      if (!group_.contains(g)) {
        throw std::invalid_argument("forbidden label " + group_.format(g) +
                                    " is not in " + group_.spec());
      }
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()),
                    elements_.end());
  }

  static ForbiddenSet from_values(const AbelianGroup& g,
                                  const std::vector<std::int64_t>& raw) {
    std::vector<GroupElement> v;
    for (std::int64_t x : raw) v.push_back(g.make(x));
    return ForbiddenSet(g, std::move(v));
  }

  const AbelianGroup& group() const { return group_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }
  bool contains(const GroupElement& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
  }

 private:
  AbelianGroup group_;
  std::vector<GroupElement> elements_;
};

/// True iff psi(X) is not forbidden.
inline bool is_f_avoiding(const Labeling& psi, const ForbiddenSet& forbidden,
                          ElementSet x) {
  if (!(psi.group == forbidden.group())) {
    throw std::invalid_argument("labeling group " + psi.group.spec() +
                                " differs from forbidden-set group " +
                                forbidden.group().spec());
  }
  if (forbidden.empty()) return true;
  return !forbidden.contains(group_sum(psi, x));
}

/// Disjoint nonempty blocks covering {0..n-1}.
class Partition {
 public:
  Partition() = default;
  Partition(int n, std::vector<ElementSet> blocks)
      : n_(n), blocks_(std::move(blocks)) {
    ElementSet seen;
    for (ElementSet b : blocks_) {
      if (b.empty()) throw std::invalid_argument("partition has an empty block");
      if (b.intersects(seen)) {
        throw std::invalid_argument("partition blocks overlap");
      }
      seen |= b;
    }
    if (seen != ElementSet::range(n_)) {
      throw std::invalid_argument("partition blocks do not cover the ground set");
    }
  }

  int ground_size() const { return n_; }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  /// Index of the block holding e.
  int block_of(int e) const {
    for (int i = 0; i < block_count(); ++i) {
      if (blocks_[i].contains(e)) return i;
    }
    throw std::out_of_range("element " + std::to_string(e) +
                            " outside partition");
  }

  /// Number of distinct blocks met by X.
  int blocks_met(ElementSet x) const {
    int count = 0;
    for (ElementSet b : blocks_) count += b.intersects(x) ? 1 : 0;
    return count;
  }

 private:
  int n_ = 0;
  std::vector<ElementSet> blocks_;
};

/// The label classes psi^{-1}(g), ordered by first occurrence of g.
inline Partition label_classes(const Labeling& psi) {
  std::vector<ElementSet> blocks;
  std::vector<GroupElement> keys;
  for (int e = 0; e < psi.size(); ++e) {
    auto it = std::find(keys.begin(), keys.end(), psi.values[e]);
    if (it == keys.end()) {
      keys.push_back(psi.values[e]);
      blocks.push_back(ElementSet{e});
    } else {
      auto& block = blocks[static_cast<std::size_t>(it - keys.begin())];
      block = block.with(e);
    }
  }
  return Partition(psi.size(), std::move(blocks));
}

/// True iff every block of P lies inside X or misses X.
inline bool is_union_of_blocks(ElementSet x, const Partition& p) {
  for (ElementSet b : p.blocks()) {
    if (b.intersects(x) && !b.is_subset_of(x)) return false;
  }
  return true;
}

}  // namespace matprox

#endif  // MATPROX_LABELS_HPP
