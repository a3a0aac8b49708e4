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

// Explicit matroids: a ground set {0..n-1} and the full list of bases.

#ifndef MATPROX_MATROID_HPP
#define MATPROX_MATROID_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matprox/element_set.hpp"

#if !defined(MATPROX_VALIDATE_CONSTRUCTORS)
#if defined(NDEBUG)
#define MATPROX_VALIDATE_CONSTRUCTORS 0
#else
#define MATPROX_VALIDATE_CONSTRUCTORS 1
#endif
#endif

namespace matprox {

/// Outcome of an exchange-axiom scan. When the axiom fails, `first`,
/// `second` and `element` are a witness: element is in first \ second and no
/// f in second \ first makes first - element + f a member of the family.
struct AxiomVerdict {
  bool holds = true;
  ElementSet first;
  ElementSet second;
  int element = -1;
};

namespace detail {

inline void check_family_shape(int n, int r,
                               const std::vector<ElementSet>& family) {
  if (n < 0 || n > kMaxElements) {
    throw std::invalid_argument("ground set size " + std::to_string(n) +
                                " outside [0, 64]");
  }
  if (r < 0 || r > n) {
    throw std::invalid_argument("rank " + std::to_string(r) +
                                " outside [0, n]");
  }
  const ElementSet ground = ElementSet::range(n);
  for (ElementSet b : family) {
    if (b.size() != r) {
      throw std::invalid_argument("basis " + to_string(b) + " has size " +
                                  std::to_string(b.size()) + ", rank is " +
                                  std::to_string(r));
    }
    if (!b.is_subset_of(ground)) {
      throw std::invalid_argument("basis " + to_string(b) +
                                  " leaves the ground set");
    }
  }
}

inline bool sorted_contains(const std::vector<ElementSet::Mask>& masks,
                            ElementSet s) {
  return std::binary_search(masks.begin(), masks.end(), s.bits());
}

/// Compresses the bits of s selected by keep into a dense prefix.
inline ElementSet compress(ElementSet s, ElementSet keep) {
  ElementSet::Mask out = 0;
  int pos = 0;
  for (int e : keep) {
    if (s.contains(e)) out |= ElementSet::Mask{1} << pos;
    ++pos;
  }
  return ElementSet(out);
}

}  // namespace detail

/// Exchange-axiom check on an arbitrary family of r-subsets of {0..n-1}.
/// Malformed sets (wrong size, out of range) throw std::invalid_argument.
inline AxiomVerdict validate_basis_axiom(int n, int r,
                                         std::vector<ElementSet> family) {
  detail::check_family_shape(n, r, family);
  if (family.empty()) return {false, {}, {}, -1};
  std::sort(family.begin(), family.end(), LexLess{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<ElementSet::Mask> masks;
  masks.reserve(family.size());
  for (ElementSet b : family) masks.push_back(b.bits());
  std::sort(masks.begin(), masks.end());

  for (ElementSet b1 : family) {
    for (ElementSet b2 : family) {
      const ElementSet out = b1 - b2;
      const ElementSet in = b2 - b1;
      for (int e : out) {
        const ElementSet base = b1.without(e);
        bool found = false;
        for (int f : in) {
          if (detail::sorted_contains(masks, base.with(f))) {
            found = true;
            break;
          }
        }
        if (!found) return {false, b1, b2, e};
      }
    }
  }
  return {};
}

/// An explicit matroid on {0..n-1}. Immutable after construction.
///
/// Bases are kept in lexicographic order of their ascending id lists, which
/// is also the order used by the text format. Membership queries go through
/// a second, numerically sorted copy of the masks.
class Matroid {
 public:
  Matroid() = default;

  /// Validates shape always, and the exchange axiom when
  /// MATPROX_VALIDATE_CONSTRUCTORS is on (the default for debug builds).
  static Matroid from_bases(int n, int r, std::vector<ElementSet> bases) {
    detail::check_family_shape(n, r, bases);
    if (bases.empty()) throw std::invalid_argument("basis family is empty");
    Matroid m = from_bases_unchecked(n, r, std::move(bases));
#if MATPROX_VALIDATE_CONSTRUCTORS
    const AxiomVerdict v = validate_basis_axiom(n, r, m.bases_);
    if (!v.holds) {
      throw std::invalid_argument(
          "basis exchange axiom fails: B=" + to_string(v.first) +
          " B'=" + to_string(v.second) + " e=" + std::to_string(v.element));
    }
#endif
    return m;
  }

  /// Canonicalizes (sorts, dedups) without checking any matroid axiom.
  /// Used for families decoded from untrusted sources; pair with
  /// validate_basis_axiom.
  static Matroid from_bases_unchecked(int n, int r,
                                      std::vector<ElementSet> bases) {
    Matroid m;
    m.n_ = n;
    m.r_ = r;
    std::sort(bases.begin(), bases.end(), LexLess{});
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    m.bases_ = std::move(bases);
    m.masks_.reserve(m.bases_.size());
    for (ElementSet b : m.bases_) m.masks_.push_back(b.bits());
    std::sort(m.masks_.begin(), m.masks_.end());
    return m;
  }

  int size() const { return n_; }
  int rank() const { return r_; }
  ElementSet ground() const { return ElementSet::range(n_); }
  const std::vector<ElementSet>& bases() const { return bases_; }
  std::size_t basis_count() const { return bases_.size(); }

  bool is_basis(ElementSet s) const {
    return detail::sorted_contains(masks_, s);
  }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.masks_ == b.masks_;
  }

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<ElementSet> bases_;
  std::vector<ElementSet::Mask> masks_;
};

inline AxiomVerdict validate_basis_axiom(const Matroid& m) {
  return validate_basis_axiom(m.size(), m.rank(), m.bases());
}

/// max over bases B of |B ∩ X|.
inline int rank_of(const Matroid& m, ElementSet x) {
  if (!x.is_subset_of(m.ground())) {
    throw std::invalid_argument("set " + to_string(x) +
                                " leaves the ground set");
  }
  int best = 0;
  for (ElementSet b : m.bases()) {
    best = std::max(best, (b & x).size());
    if (best == m.rank()) break;
  }
  return best;
}

inline bool is_independent(const Matroid& m, ElementSet x) {
  return rank_of(m, x) == x.size();
}

/// A minor relabeled to a dense ground set. element_map[new_id] = old_id.
struct MinorResult {
  Matroid matroid;
  std::vector<int> element_map;

  /// Maps a set of old ids (all surviving) to new ids.
  ElementSet to_new(ElementSet old_ids) const {
    ElementSet out;
    for (int i = 0; i < static_cast<int>(element_map.size()); ++i) {
      if (old_ids.contains(element_map[i])) out = out.with(i);
    }
    return out;
  }
  ElementSet to_old(ElementSet new_ids) const {
    ElementSet out;
    for (int e : new_ids) out = out.with(element_map[e]);
    return out;
  }
};

inline Matroid dual(const Matroid& m) {
  std::vector<ElementSet> bases;
  bases.reserve(m.basis_count());
  const ElementSet ground = m.ground();
  for (ElementSet b : m.bases()) bases.push_back(ground - b);
  return Matroid::from_bases_unchecked(m.size(), m.size() - m.rank(),
                                       std::move(bases));
}

/// M|X relabeled to {0..|X|-1}, order preserving.
inline MinorResult restrict_to(const Matroid& m, ElementSet x) {
  if (!x.is_subset_of(m.ground())) {
    throw std::invalid_argument("restriction set " + to_string(x) +
                                " leaves the ground set");
  }
  const int r = rank_of(m, x);
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    const ElementSet part = b & x;
    if (part.size() == r) bases.push_back(detail::compress(part, x));
  }
  return {Matroid::from_bases_unchecked(x.size(), r, std::move(bases)),
          x.ids()};
}

/// M/Y relabeled to {0..n-|Y|-1}, order preserving.
inline MinorResult contract(const Matroid& m, ElementSet y) {
  if (!y.is_subset_of(m.ground())) {
    throw std::invalid_argument("contraction set " + to_string(y) +
                                " leaves the ground set");
  }
  const int ry = rank_of(m, y);
  const ElementSet keep = m.ground() - y;
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    if ((b & y).size() == ry) bases.push_back(detail::compress(b - y, keep));
  }
  return {Matroid::from_bases_unchecked(keep.size(), m.rank() - ry,
                                        std::move(bases)),
          keep.ids()};
}

/// (M|X)/Y with Y ⊆ X ⊆ E, relabeled to X \ Y in increasing order.
inline MinorResult minor(const Matroid& m, ElementSet x, ElementSet y) {
  if (!y.is_subset_of(x)) {
    throw std::invalid_argument("minor needs Y ⊆ X, got Y=" + to_string(y) +
                                " X=" + to_string(x));
  }
  MinorResult restricted = restrict_to(m, x);
  MinorResult contracted =
      contract(restricted.matroid, restricted.to_new(y));
  for (int& e : contracted.element_map) e = restricted.element_map[e];
  return contracted;
}

// ---------------------------------------------------------------------------
// Sparse paving matroids.

/// Excluded r-sets H of a sparse paving matroid: bases are all other r-sets.
struct SparsePavingRep {
  int n = 0;
  int r = 0;
  std::vector<ElementSet> hyperplanes;

  /// Throws std::invalid_argument when a hyperplane has the wrong size or two
  /// hyperplanes share r-1 or more elements.
  void validate() const {
    if (n < 0 || n > kMaxElements || r < 0 || r > n) {
      throw std::invalid_argument("sparse paving rep has bad n/r");
    }
    const ElementSet ground = ElementSet::range(n);
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
      const ElementSet h = hyperplanes[i];
      if (h.size() != r || !h.is_subset_of(ground)) {
        throw std::invalid_argument("hyperplane " + to_string(h) +
                                    " is not an r-subset of the ground set");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (hyperplanes[j] == h) {
          throw std::invalid_argument("hyperplane " + to_string(h) +
                                      " listed twice");
        }
        if ((hyperplanes[j] & h).size() > r - 2) {
          throw std::invalid_argument(
              "hyperplanes " + to_string(hyperplanes[j]) + " and " +
              to_string(h) + " meet in more than r-2 elements");
        }
      }
    }
  }
};

/// The r-subsets of the ground set that are not bases.
inline std::vector<ElementSet> non_bases(const Matroid& m) {
  std::vector<ElementSet> out;
  for_each_subset(m.size(), m.rank(), [&](ElementSet s) {
    if (!m.is_basis(s)) out.push_back(s);
  });
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

/// True iff the r-set non-bases pairwise meet in at most r-2 elements.
inline bool is_sparse_paving(const Matroid& m) {
  const ElementSet ground = m.ground();
  bool ok = true;
  for_each_subset(m.size(), m.rank(), [&](ElementSet h) {
    if (m.is_basis(h)) return true;
    // Another non-basis at exchange distance one would share r-1 elements.
    for (int e : h) {
      for (int f : ground - h) {
        if (!m.is_basis(h.without(e).with(f))) {
          ok = false;
          return false;
        }
      }
    }
    return true;
  });
  return ok;
}

/// The hyperplane list of a sparse paving matroid, or nothing.
inline std::optional<SparsePavingRep> sparse_paving_rep(const Matroid& m) {
  if (!is_sparse_paving(m)) return std::nullopt;
  return SparsePavingRep{m.size(), m.rank(), non_bases(m)};
}

// ---------------------------------------------------------------------------
// Isomorphism search.

/// A permutation of element ids: element e maps to mapping[e].
struct Bijection {
  std::vector<int> mapping;

  ElementSet apply(ElementSet s) const {
    ElementSet out;
    for (int e : s) out = out.with(mapping[e]);
    return out;
  }
  bool is_permutation() const {
    std::vector<bool> hit(mapping.size(), false);
    for (int v : mapping) {
      if (v < 0 || v >= static_cast<int>(mapping.size()) || hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    return true;
  }
};

/// Applies sigma to every basis of m.
inline Matroid relabel(const Matroid& m, const Bijection& sigma) {
  std::vector<ElementSet> bases;
  bases.reserve(m.basis_count());
  for (ElementSet b : m.bases()) bases.push_back(sigma.apply(b));
  return Matroid::from_bases_unchecked(m.size(), m.rank(), std::move(bases));
}

namespace detail {

/// Backtracking over assignments of m1's elements (in id order) to m2's
/// elements (in id order). A partial assignment survives when the projections
/// of the two basis families onto the assigned parts agree as multisets; at
/// full depth this is family equality. Elements may carry colors that must
/// be preserved.
class IsoSearch {
 public:
  IsoSearch(const Matroid& m1, const Matroid& m2, std::vector<int> colors1,
            std::vector<int> colors2)
      : m1_(m1), m2_(m2) {
    const int n = m1.size();
    if (colors1.empty()) colors1.assign(n, 0);
    if (colors2.empty()) colors2.assign(m2.size(), 0);
    key1_ = invariants(m1, colors1);
    key2_ = invariants(m2, colors2);
    proj1_.assign(m1.basis_count(), 0);
    sigma_.assign(n, -1);
    used_.assign(n, false);
  }

  bool compatible_shape() const {
    if (m1_.size() != m2_.size() || m1_.rank() != m2_.rank() ||
        m1_.basis_count() != m2_.basis_count()) {
      return false;
    }
    auto a = key1_;
    auto b = key2_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  /// Visits complete isomorphisms in lexicographic order of the mapping;
  /// visit returns false to stop.
  template <typename Visit>
  void run(Visit&& visit) {
    if (!compatible_shape()) return;
    stop_ = false;
    descend(0, ElementSet{}, visit);
  }

 private:
  using Key = std::pair<int, std::size_t>;

  static std::vector<Key> invariants(const Matroid& m,
                                     const std::vector<int>& colors) {
    std::vector<Key> keys(m.size());
    for (int e = 0; e < m.size(); ++e) keys[e].first = colors[e];
    for (ElementSet b : m.bases()) {
      for (int e : b) ++keys[e].second;
    }
    return keys;
  }

  bool projections_agree(ElementSet image) {
    scratch1_ = proj1_;
    scratch2_.clear();
    for (ElementSet b : m2_.bases()) scratch2_.push_back((b & image).bits());
    std::sort(scratch1_.begin(), scratch1_.end());
    std::sort(scratch2_.begin(), scratch2_.end());
    return scratch1_ == scratch2_;
  }

  template <typename Visit>
  void descend(int depth, ElementSet image, Visit& visit) {
    const int n = m1_.size();
    if (depth == n) {
      if (!visit(Bijection{sigma_})) stop_ = true;
      return;
    }
    const auto& bases1 = m1_.bases();
    for (int t = 0; t < n && !stop_; ++t) {
      if (used_[t] || key1_[depth] != key2_[t]) continue;
      sigma_[depth] = t;
      used_[t] = true;
      const ElementSet::Mask bit = ElementSet::Mask{1} << t;
      for (std::size_t i = 0; i < bases1.size(); ++i) {
        if (bases1[i].contains(depth)) proj1_[i] |= bit;
      }
      if (projections_agree(image.with(t))) {
        descend(depth + 1, image.with(t), visit);
      }
      for (std::size_t i = 0; i < bases1.size(); ++i) proj1_[i] &= ~bit;
      used_[t] = false;
      sigma_[depth] = -1;
    }
  }

  const Matroid& m1_;
  const Matroid& m2_;
  std::vector<Key> key1_;
  std::vector<Key> key2_;
  std::vector<ElementSet::Mask> proj1_;
  std::vector<ElementSet::Mask> scratch1_;
  std::vector<ElementSet::Mask> scratch2_;
  std::vector<int> sigma_;
  std::vector<bool> used_;
  bool stop_ = false;
};

}  // namespace detail

/// A bijection sigma with sigma(B(m1)) = B(m2), or nothing. When colors are
/// given (one per element, both or neither), sigma must also map each element
/// to an element of the same color.
inline std::optional<Bijection> find_isomorphism(
    const Matroid& m1, const Matroid& m2, std::vector<int> colors1 = {},
    std::vector<int> colors2 = {}) {
  if (colors1.size() != colors2.size() ||
      (!colors1.empty() &&
       (static_cast<int>(colors1.size()) != m1.size() ||
        static_cast<int>(colors2.size()) != m2.size()))) {
    if (m1.size() != m2.size()) return std::nullopt;
    throw std::invalid_argument("color vectors must match the ground sets");
  }
  std::optional<Bijection> found;
  detail::IsoSearch search(m1, m2, std::move(colors1), std::move(colors2));
  search.run([&](const Bijection& sigma) {
    found = sigma;
    return false;
  });
  return found;
}

/// |Aut(M)|. Exhaustive, so limited to n <= 12.
inline std::uint64_t automorphism_count(const Matroid& m) {
  if (m.size() > 12) {
    throw std::invalid_argument("automorphism_count needs n <= 12, got " +
                                std::to_string(m.size()));
  }
  std::uint64_t count = 0;
  detail::IsoSearch search(m, m, {}, {});
  search.run([&](const Bijection&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace matprox

#endif  // MATPROX_MATROID_HPP
