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

// SI-orderings: orderings a, b of bases A, B such that every window
// (B \ {b_i..b_j}) ∪ {a_i..a_j} is a basis. Also the weaker prefix-swap
// (Gabow) orderings and the R10 obstruction.

#ifndef MATPROX_SIBO_HPP
#define MATPROX_SIBO_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matprox/constructions.hpp"
#include "matprox/element_set.hpp"
#include "matprox/matroid.hpp"
#include "matprox/parallel.hpp"
#include "matprox/proximity.hpp"

namespace matprox {

/// flags for 1 <= i <= j <= r, true when window (i,j) is a basis.
class SiWindowTable {
 public:
  SiWindowTable() = default;
  explicit SiWindowTable(int r) : r_(r), flags_(r * (r + 1) / 2, false) {}

  int r() const { return r_; }
  bool at(int i, int j) const { return flags_[index(i, j)]; }
  void set(int i, int j, bool v) { flags_[index(i, j)] = v; }

  bool all() const {
    return std::all_of(flags_.begin(), flags_.end(), [](bool b) { return b; });
  }

  std::vector<Window> failing() const {
    std::vector<Window> out;
    for (int i = 1; i <= r_; ++i) {
      for (int j = i; j <= r_; ++j) {
        if (!at(i, j)) out.push_back({i, j});
      }
    }
    return out;
  }

  /// Row i lists flags (i,i)..(i,r) as 0/1.
  std::string to_rows() const {
    std::string out;
    for (int i = 1; i <= r_; ++i) {
      for (int j = i; j <= r_; ++j) out += at(i, j) ? '1' : '0';
      out += '\n';
    }
    return out;
  }

 private:
  std::size_t index(int i, int j) const {
    if (i < 1 || i > j || j > r_) {
      throw std::out_of_range("window " + to_string(Window{i, j}) +
                              " outside 1.." + std::to_string(r_));
    }
    // Rows before i hold r + (r-1) + ... + (r-i+2) entries.
    const int before = (i - 1) * r_ - (i - 1) * (i - 2) / 2;
    return static_cast<std::size_t>(before + (j - i));
  }

  int r_ = 0;
  std::vector<bool> flags_;
};

namespace detail {

inline void require_basis_pair(const Matroid& m, ElementSet a, ElementSet b) {
  if (!m.is_basis(a)) throw std::invalid_argument(to_string(a) + " is not a basis");
  if (!m.is_basis(b)) throw std::invalid_argument(to_string(b) + " is not a basis");
}

}  // namespace detail

/// The window table of `pair` in m. Both sides must be bases of m; shared
/// elements must sit at the same position on both sides.
inline SiWindowTable si_window_table(const Matroid& m, const OrderingPair& pair) {
  pair.validate();
  detail::require_basis_pair(m, pair.a_set(), pair.b_set());
  const int r = pair.length();
  SiWindowTable t(r);
  for (int i = 1; i <= r; ++i) {
    for (int j = i; j <= r; ++j) {
      t.set(i, j, m.is_basis(window_set(pair, {i, j})));
    }
  }
  return t;
}

namespace detail {

/// Left-to-right backtracking over (a_p, b_p). After position p is fixed,
/// the windows (i,p) for i <= p are determined, since b_{p+1..r} is
/// whatever is left of B. Works on the disjoint parts; `common` is added to
/// every tested set, which is the same as working in M / common.
class OrderingSearch {
 public:
  enum class Mode { kSi, kGabow };

  OrderingSearch(const Matroid& m, ElementSet a, ElementSet b, Mode mode)
      : m_(m), common_(a & b), a_(a - b), b_(b - a), mode_(mode),
        r_(a_.size()) {}

  std::optional<OrderingPair> run() {
    pa_.clear();
    pb_.clear();
    if (!descend(a_, b_)) return std::nullopt;
    return lift(common_, pa_, pb_);
  }

  /// Appends the shared elements, smallest id first, at the same suffix
  /// positions on both sides.
  static OrderingPair lift(ElementSet common, std::vector<int> a,
                           std::vector<int> b) {
    for (int e : common) {
      a.push_back(e);
      b.push_back(e);
    }
    return {std::move(a), std::move(b)};
  }

 private:
  bool ok(ElementSet s) const { return m_.is_basis(s | common_); }

  bool windows_hold(ElementSet rest_a, ElementSet rest_b) const {
    const int p = static_cast<int>(pa_.size());
    if (mode_ == Mode::kGabow) {
      if (p == r_) return true;
      return ok((a_ - rest_a) | rest_b) && ok((b_ - rest_b) | rest_a);
    }
    // Window (i,p): b_1..b_{i-1}, a_i..a_p, then rest_b.
    ElementSet s = rest_b;
    for (int k = 0; k < p; ++k) s = s.with(pa_[k]);
    for (int i = 1; i <= p; ++i) {
      if (!ok(s)) return false;
      s = s.without(pa_[i - 1]).with(pb_[i - 1]);
    }
    return true;
  }

  bool descend(ElementSet rest_a, ElementSet rest_b) {
    if (rest_a.empty()) return true;
    for (int x : rest_a) {
      for (int y : rest_b) {
        pa_.push_back(x);
        pb_.push_back(y);
        const ElementSet na = rest_a.without(x);
        const ElementSet nb = rest_b.without(y);
        if (windows_hold(na, nb) && descend(na, nb)) return true;
        pa_.pop_back();
        pb_.pop_back();
      }
    }
    return false;
  }

  const Matroid& m_;
  ElementSet common_;
  ElementSet a_;
  ElementSet b_;
  Mode mode_;
  int r_;
  std::vector<int> pa_;
  std::vector<int> pb_;
};

}  // namespace detail

/// An SI-ordering of (A, B), or nothing. Shared elements C = A ∩ B are set
/// aside (the search runs in M / C on A \ B and B \ A) and appended to both
/// orderings, smallest id first, at the same positions.
inline std::optional<OrderingPair> find_si_ordering(const Matroid& m,
                                                    ElementSet a, ElementSet b) {
  detail::require_basis_pair(m, a, b);
  return detail::OrderingSearch(m, a, b, detail::OrderingSearch::Mode::kSi)
      .run();
}

/// Exhaustive oracle for find_si_ordering: tries all |A\B|!^2 ordering
/// pairs in next_permutation order and checks every window.
inline std::optional<OrderingPair> find_si_ordering_brute_force(
    const Matroid& m, ElementSet a, ElementSet b) {
  detail::require_basis_pair(m, a, b);
  const ElementSet common = a & b;
  std::vector<int> pa = (a - b).ids();
  std::vector<int> pb = (b - a).ids();
  do {
    std::vector<int> qb = pb;
    do {
      OrderingPair cand = detail::OrderingSearch::lift(common, pa, qb);
      bool all = true;
      const int r = cand.length();
      for (int i = 1; i <= r && all; ++i) {
        for (int j = i; j <= r && all; ++j) {
          all = m.is_basis(window_set(cand, {i, j}));
        }
      }
      if (all) return cand;
    } while (std::next_permutation(qb.begin(), qb.end()));
  } while (std::next_permutation(pa.begin(), pa.end()));
  return std::nullopt;
}

/// Orderings with {a_1..a_i, b_{i+1}..b_r} and {b_1..b_i, a_{i+1}..a_r}
/// bases for every i, or nothing. Shared elements are handled as in
/// find_si_ordering.
inline std::optional<OrderingPair> find_gabow_ordering(const Matroid& m,
                                                       ElementSet a,
                                                       ElementSet b) {
  detail::require_basis_pair(m, a, b);
  return detail::OrderingSearch(m, a, b, detail::OrderingSearch::Mode::kGabow)
      .run();
}

/// True iff both prefix-swap families of `pair` are bases.
inline bool is_gabow_ordering(const Matroid& m, const OrderingPair& pair) {
  pair.validate();
  const int r = pair.length();
  for (int i = 0; i <= r; ++i) {
    ElementSet p, q;
    for (int k = 0; k < r; ++k) {
      p = p.with(k < i ? pair.a[k] : pair.b[k]);
      q = q.with(k < i ? pair.b[k] : pair.a[k]);
    }
    if (!m.is_basis(p) || !m.is_basis(q)) return false;
  }
  return true;
}

struct SiboVerdict {
  bool pass = true;
  ElementSet a;  ///< witness pair without an SI-ordering
  ElementSet b;

  std::string to_string() const {
    if (pass) return "PASS";
    return "FAIL A=" + matprox::to_string(a) + " B=" + matprox::to_string(b);
  }
};

/// Whether every ordered basis pair has an SI-ordering. A failure reports
/// the first pair (A, B) in lex order of A, then B.
inline SiboVerdict is_sibo(const Matroid& m, int workers = 1) {
  const auto& bases = m.bases();
  const std::size_t n = bases.size();
  const std::size_t hit =
      parallel_find_first(n * n, workers, [&](std::size_t idx) {
        const ElementSet a = bases[idx / n];
        const ElementSet b = bases[idx % n];
        if ((a - b).size() <= 1) return false;
        return !find_si_ordering(m, a, b).has_value();
      });
  SiboVerdict v;
  if (hit < n * n) {
    v.pass = false;
    v.a = bases[hit / n];
    v.b = bases[hit % n];
  }
  return v;
}

// ---------------------------------------------------------------------------
// R10.

/// The 5-cycle v1v2..v5v1 (A) and the pentagram v1v3..v4v1 (B), as edge ids
/// of make_r10().
inline std::pair<ElementSet, ElementSet> canonical_r10_pair() {
  ElementSet cycle, star;
  for (int i = 1; i <= 5; ++i) {
    cycle = cycle.with(k5_edge(i, i + 1));
    star = star.with(k5_edge(i, i + 2));
  }
  return {cycle, star};
}

struct PairTransitivityReport {
  int pairs = 0;   ///< ordered pairs of disjoint bases
  int mapped = 0;  ///< pairs carried onto the canonical pair
  bool holds() const { return pairs > 0 && pairs == mapped; }
};

/// For every ordered pair (A, B) of disjoint bases of R10, looks for an
/// automorphism taking A to the 5-cycle and B to the pentagram.
inline PairTransitivityReport verify_r10_pair_transitivity() {
  const Matroid r10 = make_r10();
  const auto [ca, cb] = canonical_r10_pair();
  auto colors = [](ElementSet a) {
    std::vector<int> c(10);
    for (int e = 0; e < 10; ++e) c[e] = a.contains(e) ? 0 : 1;
    return c;
  };
  const std::vector<int> target = colors(ca);
  PairTransitivityReport rep;
  for (ElementSet a : r10.bases()) {
    const ElementSet b = r10.ground() - a;
    if (!r10.is_basis(b)) continue;
    ++rep.pairs;
    const auto sigma = find_isomorphism(r10, r10, colors(a), target);
    if (sigma && sigma->apply(a) == ca && sigma->apply(b) == cb) ++rep.mapped;
  }
  return rep;
}

namespace detail {

inline void check_r10_k(int k) {
  if (k < 1 || k > 5) {
    throw std::out_of_range("k must be in 1..5, got " + std::to_string(k));
  }
}

}  // namespace detail

/// Orderings of the pentagram (a) and 5-cycle (b) of R10 whose window table
/// fails only at (3,3). k in 1..5; vertex indices are cyclic.
///
///   a = (v_{k+2}v_{k+4}, v_kv_{k+2}, v_{k+3}v_{k+5}, v_{k+4}v_{k+6},
///        v_{k+1}v_{k+3})
///   b = (v_kv_{k+1}, v_{k+2}v_{k+3}, v_{k+3}v_{k+4}, v_{k+1}v_{k+2},
///        v_{k+4}v_{k+5})
inline OrderingPair r10_near_si_orderings(int k) {
  detail::check_r10_k(k);
  return {
      {k5_edge(k + 2, k + 4), k5_edge(k, k + 2), k5_edge(k + 3, k + 5),
       k5_edge(k + 4, k + 6), k5_edge(k + 1, k + 3)},
      {k5_edge(k, k + 1), k5_edge(k + 2, k + 3), k5_edge(k + 3, k + 4),
       k5_edge(k + 1, k + 2), k5_edge(k + 4, k + 5)},
  };
}

/// The same orderings with a_3 and a_4 exchanged. Their table fails at
/// (1,3) and (2,3) instead: both windows leave v_{k+3} isolated.
inline OrderingPair r10_near_si_orderings_transposed(int k) {
  OrderingPair p = r10_near_si_orderings(k);
  std::swap(p.a[2], p.a[3]);
  return p;
}

}  // namespace matprox

#endif  // MATPROX_SIBO_HPP
