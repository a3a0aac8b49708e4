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

// F-avoiding bases and how far they are from a given basis, plus the
// exchange-window machinery used to bound that distance.

#ifndef MATPROX_PROXIMITY_HPP
#define MATPROX_PROXIMITY_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matprox/element_set.hpp"
#include "matprox/labels.hpp"
#include "matprox/matroid.hpp"
#include "matprox/parallel.hpp"

namespace matprox {

/// A matroid with one group labeling and a forbidden label set.
struct LabeledInstance {
  Matroid matroid;
  Labeling psi;
  ForbiddenSet forbidden{AbelianGroup::integers()};

  LabeledInstance() = default;
  LabeledInstance(Matroid m, Labeling l, ForbiddenSet f)
      : matroid(std::move(m)), psi(std::move(l)), forbidden(std::move(f)) {
    if (psi.size() != matroid.size()) {
      throw std::invalid_argument("labeling has " + std::to_string(psi.size()) +
                                  " entries for a ground set of " +
                                  std::to_string(matroid.size()));
    }
    if (!(psi.group == forbidden.group())) {
      throw std::invalid_argument("labeling and forbidden set use different "
                                  "groups");
    }
  }

  bool avoids(ElementSet x) const {
    return forbidden.empty() || !forbidden.contains(group_sum(psi, x));
  }
};

/// Paired orderings a_1..a_r and b_1..b_r. The two sides are disjoint,
/// except that lifted orderings (see find_si_ordering) may repeat a shared
/// element at the same position on both sides.
struct OrderingPair {
  std::vector<int> a;
  std::vector<int> b;

  int length() const { return static_cast<int>(a.size()); }
  ElementSet a_set() const { return ElementSet::from_ids(a); }
  ElementSet b_set() const { return ElementSet::from_ids(b); }

  void validate() const {
    if (a.size() != b.size()) {
      throw std::invalid_argument("orderings have different lengths");
    }
    if (a_set().size() != length() || b_set().size() != length()) {
      throw std::invalid_argument("ordering repeats an element");
    }
    for (int i = 0; i < length(); ++i) {
      for (int j = 0; j < length(); ++j) {
        if (a[i] == b[j] && i != j) {
          throw std::invalid_argument(
              "element " + std::to_string(a[i]) +
              " appears on both sides at different positions");
        }
      }
    }
  }

  bool disjoint() const { return !a_set().intersects(b_set()); }
};

/// 1-based exchange window, 1 <= i <= j <= r.
struct Window {
  int i = 1;
  int j = 1;
  friend bool operator==(const Window&, const Window&) = default;
};

inline std::string to_string(const Window& w) {
  return "(" + std::to_string(w.i) + "," + std::to_string(w.j) + ")";
}

/// {b_1..b_{i-1}, a_i..a_j, b_{j+1}..b_r}.
inline ElementSet window_set(const OrderingPair& pair, Window w) {
  const int r = pair.length();
  if (w.i < 1 || w.i > w.j || w.j > r) {
    throw std::out_of_range("window " + to_string(w) + " outside 1.." +
                            std::to_string(r));
  }
  ElementSet s;
  for (int k = 1; k <= r; ++k) {
    s = s.with(k >= w.i && k <= w.j ? pair.a[k - 1] : pair.b[k - 1]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Avoiding bases and radii.

/// The lexicographically first basis B with psi(B) not in F.
inline std::optional<ElementSet> find_avoiding_basis(
    const LabeledInstance& inst) {
  for (ElementSet b : inst.matroid.bases()) {
    if (inst.avoids(b)) return b;
  }
  return std::nullopt;
}

inline std::vector<ElementSet> avoiding_bases(const LabeledInstance& inst) {
  std::vector<ElementSet> out;
  for (ElementSet b : inst.matroid.bases()) {
    if (inst.avoids(b)) out.push_back(b);
  }
  return out;
}

namespace detail {

inline int min_distance(ElementSet a, const std::vector<ElementSet>& targets) {
  int best = std::numeric_limits<int>::max();
  for (ElementSet b : targets) {
    best = std::min(best, (a - b).size());
    if (best == 0) break;
  }
  return best;
}

}  // namespace detail

/// min |A \ B| over F-avoiding bases B; nothing if no basis avoids F.
inline std::optional<int> proximity_radius(const LabeledInstance& inst,
                                           ElementSet a) {
  if (!inst.matroid.is_basis(a)) {
    throw std::invalid_argument(to_string(a) + " is not a basis");
  }
  if (inst.forbidden.empty()) return 0;
  if (inst.avoids(a)) return 0;
  int best = std::numeric_limits<int>::max();
  for (ElementSet b : inst.matroid.bases()) {
    const int d = (a - b).size();
    if (d < best && inst.avoids(b)) {
      best = d;
      if (best == 1) break;
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

/// Result of checking that every basis has an avoiding basis within |F|
/// exchanges.
struct ProximityVerdict {
  bool pass = true;
  ElementSet witness;  ///< first basis (lex order) exceeding the bound
  int radius = 0;      ///< its radius
  int bound = 0;       ///< |F|
  int max_radius = 0;  ///< largest radius seen (PASS only; 0 if vacuous)
  bool vacuous = false;  ///< no avoiding basis exists

  std::string to_string() const {
    if (pass) return "PASS";
    return "FAIL witness=" + matprox::to_string(witness) +
           " radius=" + std::to_string(radius) +
           " bound=" + std::to_string(bound);
  }
};

/// Every basis A must reach some F-avoiding basis B with |A \ B| <= |F|,
/// whenever one exists. Reports the lexicographically first violator.
inline ProximityVerdict check_proximity_bound(const LabeledInstance& inst,
                                              int workers = 1) {
  ProximityVerdict v;
  v.bound = inst.forbidden.size();
  if (inst.forbidden.empty()) return v;
  const std::vector<ElementSet> targets = avoiding_bases(inst);
  if (targets.empty()) {
    v.vacuous = true;
    return v;
  }
  const auto& bases = inst.matroid.bases();
  const std::size_t hit =
      parallel_find_first(bases.size(), workers, [&](std::size_t i) {
        return detail::min_distance(bases[i], targets) > v.bound;
      });
  if (hit < bases.size()) {
    v.pass = false;
    v.witness = bases[hit];
    v.radius = detail::min_distance(bases[hit], targets);
    return v;
  }
  for (ElementSet a : bases) {
    v.max_radius = std::max(v.max_radius, detail::min_distance(a, targets));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Pigeonhole window.

namespace detail {

inline void check_pigeonhole_input(const OrderingPair& pair, const Labeling& psi,
                                   const ForbiddenSet& forbidden) {
  pair.validate();
  if (!pair.disjoint()) {
    throw std::invalid_argument("pigeonhole window needs disjoint orderings");
  }
  if (pair.length() != forbidden.size() + 1) {
    throw std::invalid_argument("pigeonhole window needs r = |F| + 1, got r=" +
                                std::to_string(pair.length()) + " |F|=" +
                                std::to_string(forbidden.size()));
  }
  if (!(psi.group == forbidden.group())) {
    throw std::invalid_argument("labeling and forbidden set use different "
                                "groups");
  }
  const ElementSet all = pair.a_set() | pair.b_set();
  if (!all.empty() && all.max() >= psi.size()) {
    throw std::out_of_range("ordering element outside the labeling");
  }
}

}  // namespace detail

/// A window (i,j) != (1,r) whose exchange set avoids F, given that B (the
/// set of pair.b) avoids F and r = |F| + 1.
///
/// Scans the prefix windows (1,k) first. If all of (1,1)..(1,r-1) are
/// forbidden, two of the prefix sums over k = 1..r coincide (there are r of
/// them inside F when psi(A) is forbidden too), and the window between them
/// has label psi(B). If psi(A) avoids F and the r-1 forbidden prefix sums are
/// pairwise distinct, the pigeonhole argument does not apply; the remaining
/// windows with i >= 2 are then scanned directly and std::domain_error is
/// thrown if none avoids F.
inline Window pigeonhole_window(const OrderingPair& pair, const Labeling& psi,
                                const ForbiddenSet& forbidden) {
  detail::check_pigeonhole_input(pair, psi, forbidden);
  const AbelianGroup& g = psi.group;
  const int r = pair.length();
  const GroupElement base = group_sum(psi, pair.b_set());
  if (forbidden.contains(base)) {
    throw std::invalid_argument("B is not F-avoiding");
  }
  // prefix[k] = psi(B_{1,k}), prefix[0] = psi(B).
  std::vector<GroupElement> prefix(r + 1);
  prefix[0] = base;
  for (int k = 1; k <= r; ++k) {
    prefix[k] = g.add(prefix[k - 1],
                      g.subtract(psi[pair.a[k - 1]], psi[pair.b[k - 1]]));
  }
  for (int k = 1; k < r; ++k) {
    if (!forbidden.contains(prefix[k])) return {1, k};
  }
  const int last = forbidden.contains(prefix[r]) ? r : r - 1;
  for (int k2 = 2; k2 <= last; ++k2) {
    for (int k1 = 1; k1 < k2; ++k1) {
      if (prefix[k1] == prefix[k2]) return {k1 + 1, k2};
    }
  }
  if (last == r) {
    throw std::logic_error("pigeonhole window: r forbidden prefix sums in a "
                           "forbidden set of size r-1 must repeat");
  }
  for (int i = 2; i <= r; ++i) {
    for (int j = i; j <= r; ++j) {
      // psi(B_{i,j}) = psi(B) + prefix[j] - prefix[i-1]
      const GroupElement s = g.add(base, g.subtract(prefix[j], prefix[i - 1]));
      if (!forbidden.contains(s)) return {i, j};
    }
  }
  throw std::domain_error(
      "no F-avoiding window other than (1,r): psi(A) avoids F and the prefix "
      "sums fill F");
}

// ---------------------------------------------------------------------------
// Reduced counterexample form.

/// True iff the matroid has rank target_rank, B is its unique F-avoiding
/// basis, and E \ B is a basis. target_rank defaults to |F| + 1.
inline bool check_reduced_form(const LabeledInstance& inst, ElementSet b,
                               std::optional<int> target_rank = std::nullopt) {
  const Matroid& m = inst.matroid;
  const int target = target_rank.value_or(inst.forbidden.size() + 1);
  if (m.rank() != target) return false;
  if (!m.is_basis(b) || !m.is_basis(m.ground() - b)) return false;
  if (!inst.avoids(b)) return false;
  for (ElementSet other : m.bases()) {
    if (other != b && inst.avoids(other)) return false;
  }
  return true;
}

/// Which rank the reduced minor must have.
enum class ReductionTarget {
  /// Rank |F| + 1; the input basis must have radius > |F|.
  kCounterexample,
  /// Rank equal to the radius of the input basis (any radius >= 1). Useful
  /// for illustrating the reduction on instances that satisfy the bound.
  kRadius,
};

struct ReducedWitness {
  enum class Status { kFound, kNotCounterexample, kNoAvoidingBasis, kNotFound,
                      kTruncated };
  Status status = Status::kNotFound;
  ElementSet kept;        ///< X, in original ids
  ElementSet contracted;  ///< Y ⊆ X, in original ids
  MinorResult minor;      ///< (M|X)/Y
  std::optional<LabeledInstance> instance;  ///< minor with psi', F'
  ElementSet basis;       ///< B' in minor ids
  std::uint64_t configurations = 0;

  static std::string status_name(Status s) {
    switch (s) {
      case Status::kFound: return "FOUND";
      case Status::kNotCounterexample: return "NOT-COUNTEREXAMPLE";
      case Status::kNoAvoidingBasis: return "NO-AVOIDING-BASIS";
      case Status::kNotFound: return "NOT-FOUND";
      case Status::kTruncated: return "TRUNCATED";
    }
    return "?";
  }
};

/// Brute-force search for a minor (M|X)/Y in reduced form.
///
/// Y is independent, psi' is psi restricted to X \ Y and F' = F - psi(Y),
/// so that B' avoids F' in the minor iff the basis B' ∪ Y avoids F in M. The removed set (E \ X) ∪ Y has
/// n - 2 * rank elements; removed sets are tried in colex order, and within
/// each the choices of Y by size, then colex. Stops after `max_configurations` (X, Y) pairs.
inline ReducedWitness find_reduced_witness(
    const LabeledInstance& inst, ElementSet a,
    ReductionTarget target = ReductionTarget::kCounterexample,
    std::uint64_t max_configurations = 1'000'000) {
  ReducedWitness out;
  const Matroid& m = inst.matroid;
  const std::optional<int> radius = proximity_radius(inst, a);
  if (!radius) {
    out.status = ReducedWitness::Status::kNoAvoidingBasis;
    return out;
  }
  int rank_needed = 0;
  if (target == ReductionTarget::kCounterexample) {
    if (*radius <= inst.forbidden.size()) {
      out.status = ReducedWitness::Status::kNotCounterexample;
      return out;
    }
    rank_needed = inst.forbidden.size() + 1;
  } else {
    if (*radius == 0) {
      out.status = ReducedWitness::Status::kNotCounterexample;
      return out;
    }
    rank_needed = *radius;
  }
  const int n = m.size();
  const int minor_size = 2 * rank_needed;
  const AbelianGroup& g = inst.psi.group;
  const int removed = n - minor_size;
  if (removed < 0) {
    out.status = ReducedWitness::Status::kNotFound;
    return out;
  }
  bool done = false;
  for_each_subset(n, removed, [&](ElementSet gone) {
    // Split `gone` into deleted elements and contracted elements Y.
    for (int ysize = 0; ysize <= removed && !done; ++ysize) {
      for_each_subset(removed, ysize, [&](ElementSet pick) {
        if (++out.configurations > max_configurations) {
          out.status = ReducedWitness::Status::kTruncated;
          done = true;
          return false;
        }
        ElementSet y;
        int idx = 0;
        for (int e : gone) {
          if (pick.contains(idx++)) y = y.with(e);
        }
        if (!is_independent(m, y)) return true;
        const ElementSet x = (m.ground() - gone) | y;
        MinorResult mr = minor(m, x, y);
        if (mr.matroid.rank() != rank_needed) return true;
        std::vector<GroupElement> vals;
        for (int old : mr.element_map) vals.push_back(inst.psi[old]);
        const GroupElement shift = group_sum(inst.psi, y);
        std::vector<GroupElement> fshift;
        for (const auto& f : inst.forbidden.elements()) {
          fshift.push_back(g.subtract(f, shift));
        }
        LabeledInstance sub(mr.matroid, Labeling(g, std::move(vals)),
                            ForbiddenSet(g, std::move(fshift)));
        const auto avoiding = avoiding_bases(sub);
        if (avoiding.size() != 1) return true;
        if (!check_reduced_form(sub, avoiding.front(), rank_needed)) {
          return true;
        }
        out.status = ReducedWitness::Status::kFound;
        out.kept = x;
        out.contracted = y;
        out.basis = avoiding.front();
        out.minor = std::move(mr);
        out.instance = std::move(sub);
        done = true;
        return false;
      });
    }
    return !done;
  });
  if (done) return out;
  out.status = ReducedWitness::Status::kNotFound;
  return out;
}

// ---------------------------------------------------------------------------
// Orderings that avoid unions of color classes.

/// True iff no window (i,j) != (1,r) gives a union of blocks of c.
inline bool check_no_window_is_union(const OrderingPair& pair,
                                     const Partition& c) {
  const int r = pair.length();
  for (int i = 1; i <= r; ++i) {
    for (int j = i; j <= r; ++j) {
      if (i == 1 && j == r) continue;
      if (is_union_of_blocks(window_set(pair, {i, j}), c)) return false;
    }
  }
  return true;
}

/// Orderings of A and B such that no window other than (1,r) is a union of
/// color classes. Needs |c(A)| + |c(B)| <= r + 1, counting the classes met
/// by A and by B separately.
///
/// Positions are filled left to right so that each chosen a_i (or b_i) still
/// has a same-colored mate further right on its own side. When the class
/// counts sum to r' + 1 on the remaining r' pairs, some element is alone in
/// its class on its side; it is placed opposite a mated element of the other
/// side, which drops the count by one. Otherwise a mated a is placed opposite
/// the smallest remaining b. Ties go to the smallest id, and to the B side
/// when both sides have a lone element.
inline OrderingPair coloring_ordering(ElementSet a, ElementSet b,
                                      const Partition& c) {
  if (a.intersects(b)) throw std::invalid_argument("A and B must be disjoint");
  if (a.size() != b.size()) {
    throw std::invalid_argument("A and B must have the same size");
  }
  if (!(a | b).is_subset_of(ElementSet::range(c.ground_size()))) {
    throw std::invalid_argument("coloring does not cover A ∪ B");
  }
  const int r = a.size();
  if (c.blocks_met(a) + c.blocks_met(b) > r + 1) {
    throw std::invalid_argument(
        "coloring uses " + std::to_string(c.blocks_met(a)) + " + " +
        std::to_string(c.blocks_met(b)) + " classes on A and B, more than r+1");
  }
  std::vector<int> color(c.ground_size());
  for (int k = 0; k < c.block_count(); ++k) {
    for (int e : c.blocks()[k]) color[e] = k;
  }
  // Smallest element of `side` sharing its color with another element of
  // `side`, or -1.
  auto mated = [&](ElementSet side) {
    for (int e : side) {
      for (int f : side.without(e)) {
        if (color[e] == color[f]) return e;
      }
    }
    return -1;
  };
  auto lone = [&](ElementSet side) {
    for (int e : side) {
      bool alone = true;
      for (int f : side.without(e)) alone &= color[e] != color[f];
      if (alone) return e;
    }
    return -1;
  };
  auto fail = [] {
    throw std::logic_error("coloring ordering: class count invariant broken");
  };

  OrderingPair out;
  ElementSet rest_a = a;
  ElementSet rest_b = b;
  while (rest_a.size() > 1) {
    const int rr = rest_a.size();
    int pick_a = -1;
    int pick_b = -1;
    if (c.blocks_met(rest_a) + c.blocks_met(rest_b) == rr + 1) {
      if (const int lb = lone(rest_b); lb >= 0) {
        pick_b = lb;
        pick_a = mated(rest_a);
      } else if (const int la = lone(rest_a); la >= 0) {
        pick_a = la;
        pick_b = mated(rest_b);
      }
    } else {
      pick_a = mated(rest_a);
      pick_b = rest_b.min();
    }
    if (pick_a < 0 || pick_b < 0) fail();
    out.a.push_back(pick_a);
    out.b.push_back(pick_b);
    rest_a = rest_a.without(pick_a);
    rest_b = rest_b.without(pick_b);
  }
  if (r >= 1) {
    out.a.push_back(rest_a.min());
    out.b.push_back(rest_b.min());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Label-class dichotomy for sparse paving matroids with a unique avoiding
// basis.

/// For an r-set X != B with psi(X) not in F, where B is the only F-avoiding
/// basis of a sparse paving matroid: X is a union of label classes, or
/// |B \ X| = 1, B △ X is a label class and X ∩ B is a union of label classes.
/// Returns which holds (false if neither). The preconditions on X throw;
/// the matroid-level ones (sparse paving, B unique) are the caller's to
/// establish, so that corrupted instances can be probed.
inline bool check_label_class_dichotomy(const LabeledInstance& inst,
                                        ElementSet b, ElementSet x) {
  const Matroid& m = inst.matroid;
  if (x.size() != m.rank() || !x.is_subset_of(m.ground())) {
    throw std::invalid_argument("X must be an r-subset of the ground set");
  }
  if (x == b) throw std::invalid_argument("X must differ from B");
  if (!inst.avoids(x)) throw std::invalid_argument("X must avoid F");
  const Partition classes = label_classes(inst.psi);
  if (is_union_of_blocks(x, classes)) return true;
  if ((b - x).size() != 1) return false;
  const ElementSet sym = b ^ x;
  const bool sym_is_class =
      std::find(classes.blocks().begin(), classes.blocks().end(), sym) !=
      classes.blocks().end();
  return sym_is_class && is_union_of_blocks(x & b, classes);
}

}  // namespace matprox

#endif  // MATPROX_PROXIMITY_HPP
