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

// Several labelings at once: a basis is valid when psi_t(B) != f_t for every
// t. Window bounds, the 2^k - 1 lower-bound family, closest valid bases,
// weak base orderability and uniform B-minors of sparse paving matroids.

#ifndef MATPROX_MULTILABEL_HPP
#define MATPROX_MULTILABEL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matprox/constructions.hpp"
#include "matprox/element_set.hpp"
#include "matprox/labels.hpp"
#include "matprox/matroid.hpp"
#include "matprox/proximity.hpp"

namespace matprox {

struct Constraint {
  Labeling psi;
  GroupElement f;
};

/// True iff psi_t(X) != f_t for all t.
inline bool satisfies_all(const std::vector<Constraint>& cs, ElementSet x) {
  for (const auto& c : cs) {
    if (group_sum(c.psi, x) == c.f) return false;
  }
  return true;
}

struct MultiLabelInstance {
  Matroid matroid;
  std::vector<Constraint> constraints;

  MultiLabelInstance() = default;
  MultiLabelInstance(Matroid m, std::vector<Constraint> cs)
      : matroid(std::move(m)), constraints(std::move(cs)) {
    for (const auto& c : constraints) {
      if (c.psi.size() != matroid.size()) {
        throw std::invalid_argument("labeling size does not match the matroid");
      }
      if (!c.psi.group.contains(c.f)) {
        throw std::invalid_argument("target " + c.psi.group.format(c.f) +
                                    " is not in " + c.psi.group.spec());
      }
    }
  }

  int k() const { return static_cast<int>(constraints.size()); }
  bool valid(ElementSet x) const { return satisfies_all(constraints, x); }
};

// ---------------------------------------------------------------------------
// Bounds.

/// floor((e - 1/2) k!) for k >= 1 by the exact series
/// sum_{i<=k} k!/i! - k!/2 (the remaining tail lies in (0,1)); 1 for k = 0.
inline std::int64_t window_bound(int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (k > 12) throw std::overflow_error("window_bound supports k <= 12");
  if (k == 0) return 1;
  if (k == 1) return 2;
  std::int64_t fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  std::int64_t sum = 0;
  std::int64_t term = fact;  // k!/i! for i = 0
  for (int i = 0; i <= k; ++i) {
    if (i > 0) term /= i;
    sum += term;
  }
  return sum - fact / 2;
}

struct ExchangeBoundSpec {
  int k = 0;
  std::int64_t window_bound = 0;
  std::int64_t proximity_bound = 0;  ///< window_bound - 1
  std::int64_t lower_bound = 0;      ///< 2^k - 1
};

inline ExchangeBoundSpec exchange_bounds(int k) {
  if (k > 62) throw std::overflow_error("k too large");
  const std::int64_t w = window_bound(k);
  return {k, w, w - 1, (std::int64_t{1} << k) - 1};
}

// ---------------------------------------------------------------------------
// The 2^k - 1 family.

/// Labels of the lower-bound family on 2r elements, r = 2^k - 1, with A the
/// first r elements: psi_i is 2^{i-1} - 1 on A and 2^{i-1} off A, over
/// Z_{2^i} for i < k; psi_k is 2^{k-1} - 1 on A and -2^{k-1} off A, over Z.
/// All targets are 0.
inline std::vector<Constraint> lower_bound_constraints(int k) {
  if (k < 1 || k > 4) {
    throw std::out_of_range("lower-bound family supports 1 <= k <= 4");
  }
  const int r = (1 << k) - 1;
  std::vector<Constraint> cs;
  for (int i = 1; i <= k; ++i) {
    const std::int64_t half = std::int64_t{1} << (i - 1);
    const AbelianGroup g =
        i < k ? AbelianGroup::cyclic(std::int64_t{1} << i) : AbelianGroup::integers();
    std::vector<std::int64_t> raw(2 * r);
    for (int e = 0; e < 2 * r; ++e) {
      raw[e] = e < r ? half - 1 : (i < k ? half : -half);
    }
    cs.push_back({Labeling::from_values(g, raw), g.zero()});
  }
  return cs;
}

/// U_{r,2r} with the lower-bound labels, and A = {0..r-1}. The matroid is
/// listed explicitly, so k <= 3.
inline std::pair<MultiLabelInstance, ElementSet> lower_bound_instance(int k) {
  if (k < 1 || k > 3) {
    throw std::out_of_range("explicit lower-bound instance supports 1 <= k <= 3");
  }
  const int r = (1 << k) - 1;
  return {MultiLabelInstance(make_uniform(r, 2 * r), lower_bound_constraints(k)),
          ElementSet::range(r)};
}

/// Valid exchange counts of the lower-bound family, without listing bases:
/// in U_{r,2r} the labels of a basis depend only on l = |A \ B'|. Returns
/// the l in 0..r for which such a basis is valid.
inline std::vector<int> lower_bound_valid_exchange_counts(int k) {
  const auto cs = lower_bound_constraints(k);
  const int r = (1 << k) - 1;
  std::vector<int> out;
  for (int l = 0; l <= r; ++l) {
    // Swap the last l elements of A for the first l outside A.
    const ElementSet b = ElementSet::range(r - l) |
                         (ElementSet::range(r + l) - ElementSet::range(r));
    if (satisfies_all(cs, b)) out.push_back(l);
  }
  return out;
}

/// B is valid and no other basis is (full enumeration).
inline bool verify_unique_valid_basis(const MultiLabelInstance& inst,
                                      ElementSet b) {
  if (!inst.matroid.is_basis(b)) {
    throw std::invalid_argument(to_string(b) + " is not a basis");
  }
  if (!inst.valid(b)) return false;
  for (ElementSet other : inst.matroid.bases()) {
    if (other != b && inst.valid(other)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Windows over blocks.

/// Disjoint nonempty blocks X_1..X_l inside `base` and Y_1..Y_l outside it.
struct BlockSequence {
  ElementSet base;
  std::vector<ElementSet> x;
  std::vector<ElementSet> y;

  int length() const { return static_cast<int>(x.size()); }

  void validate() const {
    if (x.size() != y.size()) {
      throw std::invalid_argument("block lists have different lengths");
    }
    ElementSet seen;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].empty() || y[i].empty()) {
        throw std::invalid_argument("block " + std::to_string(i + 1) +
                                    " is empty");
      }
      if (!x[i].is_subset_of(base) || y[i].intersects(base)) {
        throw std::invalid_argument("block " + std::to_string(i + 1) +
                                    " is on the wrong side of the base");
      }
      if (x[i].intersects(seen) || y[i].intersects(seen | x[i])) {
        throw std::invalid_argument("blocks overlap");
      }
      seen = seen | x[i] | y[i];
    }
  }

  /// (B \ (X_i ∪ .. ∪ X_j)) ∪ (Y_i ∪ .. ∪ Y_j), 1-based.
  ElementSet window(int i, int j) const {
    if (i < 1 || i > j || j > length()) {
      throw std::out_of_range("window " + to_string(Window{i, j}) +
                              " outside 1.." + std::to_string(length()));
    }
    ElementSet out = base;
    for (int s = i; s <= j; ++s) out = (out - x[s - 1]) | y[s - 1];
    return out;
  }
};

/// The first window (i,j), i then j ascending, valid for every constraint.
/// Needs a valid base and l >= 1.
inline std::optional<Window> find_window_multi(
    const BlockSequence& blocks, const std::vector<Constraint>& cs) {
  blocks.validate();
  if (blocks.length() < 1) throw std::invalid_argument("no blocks");
  if (!satisfies_all(cs, blocks.base)) {
    throw std::invalid_argument("base violates a constraint");
  }
  const int l = blocks.length();
  for (int i = 1; i <= l; ++i) {
    for (int j = i; j <= l; ++j) {
      if (satisfies_all(cs, blocks.window(i, j))) return Window{i, j};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Closest valid bases.

struct ClosestBasis {
  ElementSet basis;
  int distance = 0;
};

/// A valid basis minimizing |A \ B| (lex-first among ties), or nothing.
inline std::optional<ClosestBasis> closest_valid_basis(
    const MultiLabelInstance& inst, ElementSet a) {
  if (!inst.matroid.is_basis(a)) {
    throw std::invalid_argument(to_string(a) + " is not a basis");
  }
  std::optional<ClosestBasis> best;
  for (ElementSet b : inst.matroid.bases()) {
    const int d = (a - b).size();
    if (best && d >= best->distance) continue;
    if (inst.valid(b)) best = ClosestBasis{b, d};
  }
  return best;
}

enum class ExponentialVerdict { kSatisfied, kViolated, kNoValidBasis };

struct ExponentialProximityReport {
  ExponentialVerdict verdict = ExponentialVerdict::kNoValidBasis;
  int distance = 0;
  std::int64_t bound = 0;  ///< 2^k - 1

  std::string to_string() const {
    switch (verdict) {
      case ExponentialVerdict::kSatisfied:
        return "SATISFIED distance=" + std::to_string(distance) +
               " bound=" + std::to_string(bound);
      case ExponentialVerdict::kViolated:
        return "VIOLATED distance=" + std::to_string(distance) +
               " bound=" + std::to_string(bound);
      case ExponentialVerdict::kNoValidBasis:
        return "NO-VALID-BASIS";
    }
    return "?";
  }
};

/// Is some valid basis within 2^k - 1 exchanges of A?
inline ExponentialProximityReport check_exponential_proximity(
    const MultiLabelInstance& inst, ElementSet a) {
  ExponentialProximityReport rep;
  rep.bound = exchange_bounds(inst.k()).lower_bound;
  const auto best = closest_valid_basis(inst, a);
  if (!best) return rep;
  rep.distance = best->distance;
  rep.verdict = best->distance <= rep.bound ? ExponentialVerdict::kSatisfied
                                            : ExponentialVerdict::kViolated;
  return rep;
}

// ---------------------------------------------------------------------------
// Weak base orderability.

struct WeakOrderabilityReport {
  bool holds = true;
  ElementSet a;  ///< first failing pair (A, B)
  ElementSet b;
  std::uint64_t pairs_checked = 0;
  std::uint64_t nodes = 0;
};

namespace detail {

class BlockSearch {
 public:
  BlockSearch(const Matroid& m, ElementSet b, ElementSet from_b,
              ElementSet from_a, int k, std::uint64_t& nodes,
              std::uint64_t max_nodes)
      : m_(m), b_(b), from_b_(from_b), from_a_(from_a), k_(k), nodes_(nodes),
        max_nodes_(max_nodes) {}

  bool run() { return place(0, from_b_, from_a_); }

 private:
  // All combinations containing the newest block are bases.
  bool newest_ok() const {
    const int last = static_cast<int>(xs_.size()) - 1;
    for (std::uint32_t z = 0; z < (1U << last); ++z) {
      ElementSet s = (b_ - xs_[last]) | ys_[last];
      for (int i = 0; i < last; ++i) {
        if (z >> i & 1U) s = (s - xs_[i]) | ys_[i];
      }
      if (!m_.is_basis(s)) return false;
    }
    return true;
  }

  bool place(int i, ElementSet rest_b, ElementSet rest_a) {
    if (i == k_) return true;
    if (++nodes_ > max_nodes_) {
      throw std::length_error("weak orderability search exceeded " +
                              std::to_string(max_nodes_) + " nodes");
    }
    // X blocks have increasing minima, which removes block permutations.
    const int floor_id = i == 0 ? -1 : xs_.back().min();
    const int nb = rest_b.size();
    const int na = rest_a.size();
    const std::vector<int> ids_b = rest_b.ids();
    const std::vector<int> ids_a = rest_a.ids();
    for (int size = 1; size <= std::min(nb, na) - (k_ - i - 1); ++size) {
      bool found = false;
      for_each_subset(nb, size, [&](ElementSet pick_x) {
        ElementSet x;
        for (int p : pick_x) x = x.with(ids_b[p]);
        if (x.min() < floor_id) return true;
        for_each_subset(na, size, [&](ElementSet pick_y) {
          ElementSet y;
          for (int p : pick_y) y = y.with(ids_a[p]);
          xs_.push_back(x);
          ys_.push_back(y);
          if (newest_ok() && place(i + 1, rest_b - x, rest_a - y)) {
            found = true;
          } else {
            xs_.pop_back();
            ys_.pop_back();
          }
          return !found;
        });
        return !found;
      });
      if (found) return true;
    }
    return false;
  }

  const Matroid& m_;
  ElementSet b_;
  ElementSet from_b_;
  ElementSet from_a_;
  int k_;
  std::uint64_t& nodes_;
  std::uint64_t max_nodes_;
  std::vector<ElementSet> xs_;
  std::vector<ElementSet> ys_;
};

}  // namespace detail

/// For every ordered pair (A, B) with |A \ B| >= alpha: disjoint nonempty
/// X_1..X_k ⊆ B \ A and Y_1..Y_k ⊆ A \ B such that swapping any subfamily
/// of the (X_i, Y_i) into B gives a basis. Exhaustive; throws
/// std::length_error past max_nodes search nodes.
inline WeakOrderabilityReport is_weakly_base_orderable(
    const Matroid& m, int alpha, int k,
    std::uint64_t max_nodes = 50'000'000) {
  if (alpha < 1 || k < 1) throw std::invalid_argument("alpha, k must be >= 1");
  if (k > 20) throw std::invalid_argument("k too large");
  WeakOrderabilityReport rep;
  for (ElementSet a : m.bases()) {
    for (ElementSet b : m.bases()) {
      if ((a - b).size() < alpha) continue;
      ++rep.pairs_checked;
      detail::BlockSearch search(m, b, b - a, a - b, k, rep.nodes, max_nodes);
      if (!search.run()) {
        rep.holds = false;
        rep.a = a;
        rep.b = b;
        return rep;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Uniform B-minors of sparse paving matroids.

struct UniformMinor {
  ElementSet x;  ///< kept, Y ⊆ B ⊆ X
  ElementSet y;  ///< contracted
};

/// Every k-subset Z of X \ Y has Z ∪ Y a basis, |X \ Y| = 2k, Y ⊆ B ⊆ X.
inline bool is_uniform_b_minor(const Matroid& m, ElementSet b,
                               const UniformMinor& u, int k) {
  if (!u.y.is_subset_of(b) || !b.is_subset_of(u.x)) return false;
  const ElementSet s = u.x - u.y;
  if (s.size() != 2 * k || u.y.size() + k != m.rank()) return false;
  const std::vector<int> ids = s.ids();
  bool all = true;
  for_each_subset(2 * k, k, [&](ElementSet pick) {
    ElementSet z = u.y;
    for (int p : pick) z = z.with(ids[p]);
    all = m.is_basis(z);
    return all;
  });
  return all;
}

/// (M|X)/Y ≅ U_{k,2k} with Y ⊆ B ⊆ X, built up from k = 0 (X = Y = B).
/// Each step moves one y out of Y, chosen inside every non-basis H ⊆ B ∪ S
/// with |H ∩ S| = k (S = X \ Y), then adds one x outside X that lies in no
/// non-basis H ⊇ Y' with |H ∩ (X \ Y')| = k - 1. Smallest ids win.
inline UniformMinor extract_uniform_minor(const Matroid& m, ElementSet b, int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (!m.is_basis(b)) throw std::invalid_argument(to_string(b) + " is not a basis");
  const int r = m.rank();
  const int n = m.size();
  if (static_cast<std::uint64_t>(std::min(r, n - r)) < binomial(2 * k, k)) {
    throw std::invalid_argument("need min(r, n-r) >= C(2k, k)");
  }
  if (!is_sparse_paving(m)) throw std::invalid_argument("matroid is not sparse paving");
  const std::vector<ElementSet> hyperplanes = non_bases(m);
  UniformMinor u{b, b};
  for (int step = 1; step <= k; ++step) {
    const ElementSet s = u.x - u.y;
    ElementSet common_y = u.y;
    for (ElementSet h : hyperplanes) {
      if (h.is_subset_of(b | s) && (h & s).size() == step) common_y = common_y & h;
    }
    if (common_y.empty()) {
      throw std::logic_error("uniform minor: no admissible y at step " +
                             std::to_string(step));
    }
    const ElementSet y2 = u.y.without(common_y.min());
    const ElementSet t = u.x - y2;
    ElementSet blocked;
    for (ElementSet h : hyperplanes) {
      if (y2.is_subset_of(h) && (h & t).size() == step - 1) blocked = blocked | h;
    }
    const ElementSet free_x = m.ground() - u.x - blocked;
    if (free_x.empty()) {
      throw std::logic_error("uniform minor: no admissible x at step " +
                             std::to_string(step));
    }
    u = UniformMinor{u.x.with(free_x.min()), y2};
    if (!is_uniform_b_minor(m, b, u, step)) {
      throw std::logic_error("uniform minor: step " + std::to_string(step) +
                             " produced a non-uniform minor");
    }
  }
  return u;
}

}  // namespace matprox

#endif  // MATPROX_MULTILABEL_HPP
