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

// CNF encoding of "a rank-r matroid on [2r] in which [r] and its complement
// are bases with no SI-ordering", plus model decoding and blocking.
//
// Variables x_S, one per r-subset S of {0..2r-1}, numbered by colex rank
// plus one. Clause families, in emission order:
//   (a) exchange: for r-sets A != B and e in A \ B,
//       -x_A  -x_B  x_{A-e+f} for f in B \ A ascending;
//   (b) units x_{[r]} and x_{E \ [r]};
//   (c) for each ordering a of [r] and b of E \ [r], the disjunction over
//       0 <= i < j <= r of -x_{a_1..a_i, b_{i+1}..b_j, a_{j+1}..a_r};
//   (d) optional, sparse paving: clause (x_S, x_T) for S < T with |S ∩ T| = r-1.

#ifndef MATPROX_SATGEN_HPP
#define MATPROX_SATGEN_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "matprox/element_set.hpp"
#include "matprox/matroid.hpp"
#include "matprox/sibo.hpp"

namespace matprox {

/// r-subsets of {0..2r-1} <-> variables 1..C(2r, r), by colex rank.
class SubsetVarMap {
 public:
  explicit SubsetVarMap(int r) : r_(r) {
    if (r < 1 || r > 16) {
      throw std::invalid_argument("SubsetVarMap needs 1 <= r <= 16");
    }
  }

  int r() const { return r_; }
  int n() const { return 2 * r_; }
  int num_vars() const { return static_cast<int>(binomial(2 * r_, r_)); }

  int var(ElementSet s) const {
    if (s.size() != r_ || !s.is_subset_of(ElementSet::range(n()))) {
      throw std::invalid_argument(to_string(s) + " is not an " +
                                  std::to_string(r_) + "-subset of [" +
                                  std::to_string(n()) + "]");
    }
    std::uint64_t rank = 0;
    int k = 1;
    for (int e : s) rank += binomial(e, k++);
    return static_cast<int>(rank) + 1;
  }

  ElementSet subset(int v) const {
    if (v < 1 || v > num_vars()) {
      throw std::out_of_range("variable " + std::to_string(v) +
                              " outside 1.." + std::to_string(num_vars()));
    }
    std::uint64_t rank = static_cast<std::uint64_t>(v - 1);
    ElementSet s;
    int e = n() - 1;
    for (int k = r_; k >= 1; --k) {
      while (binomial(e, k) > rank) --e;
      s = s.with(e);
      rank -= binomial(e, k);
      --e;
    }
    return s;
  }

 private:
  int r_;
};

/// Clauses stored flat; family[c] in {'a','b','c','d','x'} ('x' = blocking).
class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return family_.size(); }

  void add(const std::vector<int>& lits, char family) {
    if (lits.empty()) throw std::invalid_argument("empty clause");
    for (int l : lits) {
      if (l == 0 || l > num_vars_ || -l > num_vars_) {
        throw std::out_of_range("literal " + std::to_string(l) +
                                " outside 1.." + std::to_string(num_vars_));
      }
    }
    lits_.insert(lits_.end(), lits.begin(), lits.end());
    offsets_.push_back(lits_.size());
    family_.push_back(family);
  }

  std::vector<int> clause(std::size_t c) const {
    const std::size_t begin = c == 0 ? 0 : offsets_[c - 1];
    return {lits_.begin() + static_cast<std::ptrdiff_t>(begin),
            lits_.begin() + static_cast<std::ptrdiff_t>(offsets_[c])};
  }
  char family(std::size_t c) const { return family_[c]; }

  std::size_t count(char family) const {
    return static_cast<std::size_t>(
        std::count(family_.begin(), family_.end(), family));
  }

  /// True iff every clause has a true literal; value[v] for v in 1..n.
  bool satisfied_by(const std::vector<bool>& value) const {
    std::size_t begin = 0;
    for (std::size_t end : offsets_) {
      bool sat = false;
      for (std::size_t i = begin; i < end && !sat; ++i) {
        const int l = lits_[i];
        sat = l > 0 ? value[l] : !value[-l];
      }
      if (!sat) return false;
      begin = end;
    }
    return true;
  }

 private:
  int num_vars_ = 0;
  std::vector<int> lits_;
  std::vector<std::size_t> offsets_;
  std::vector<char> family_;
};

struct CnfOptions {
  bool sparse_paving = false;
  /// Drop the literal -x_{E \ [r]} from family (c); the unit in (b)
  /// falsifies it.
  bool simplify_units = false;
  /// Sort literals, drop repeated literals, and drop repeated clauses within
  /// each family.
  bool normalize = false;
};

namespace detail {

class FamilyBuffer {
 public:
  FamilyBuffer(CnfFormula& f, char family, bool normalize)
      : f_(f), family_(family), normalize_(normalize) {}

  void add(std::vector<int> lits) {
    if (normalize_) {
      std::sort(lits.begin(), lits.end());
      lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
      if (!seen_.insert(lits).second) return;
    }
    f_.add(lits, family_);
  }

 private:
  CnfFormula& f_;
  char family_;
  bool normalize_;
  std::set<std::vector<int>> seen_;
};

}  // namespace detail

inline CnfFormula build_non_sibo_cnf(int r, const CnfOptions& opts = {}) {
  if (r < 1 || r > 6) {
    throw std::invalid_argument("rank must be in 1..6, got " + std::to_string(r));
  }
  const SubsetVarMap map(r);
  const int n = 2 * r;
  const int vars = map.num_vars();
  CnfFormula f(vars);
  const ElementSet low = ElementSet::range(r);
  const ElementSet high = ElementSet::range(n) - low;

  {
    detail::FamilyBuffer buf(f, 'a', opts.normalize);
    for (int va = 1; va <= vars; ++va) {
      const ElementSet a = map.subset(va);
      for (int vb = 1; vb <= vars; ++vb) {
        if (va == vb) continue;
        const ElementSet b = map.subset(vb);
        for (int e : a - b) {
          std::vector<int> lits{-va, -vb};
          for (int x : b - a) lits.push_back(map.var(a.without(e).with(x)));
          buf.add(std::move(lits));
        }
      }
    }
  }
  f.add({map.var(low)}, 'b');
  f.add({map.var(high)}, 'b');
  {
    detail::FamilyBuffer buf(f, 'c', opts.normalize);
    const int skip = -map.var(high);
    std::vector<int> pa = low.ids();
    do {
      std::vector<int> pb = high.ids();
      do {
        std::vector<int> lits;
        for (int i = 0; i < r; ++i) {
          for (int j = i + 1; j <= r; ++j) {
            ElementSet s;
            for (int k = 0; k < r; ++k) {
              s = s.with(k >= i && k < j ? pb[k] : pa[k]);
            }
            const int lit = -map.var(s);
            if (opts.simplify_units && lit == skip) continue;
            lits.push_back(lit);
          }
        }
        buf.add(std::move(lits));
      } while (std::next_permutation(pb.begin(), pb.end()));
    } while (std::next_permutation(pa.begin(), pa.end()));
  }
  if (opts.sparse_paving) {
    detail::FamilyBuffer buf(f, 'd', opts.normalize);
    for (int vs = 1; vs <= vars; ++vs) {
      const ElementSet s = map.subset(vs);
      for (int vt = vs + 1; vt <= vars; ++vt) {
        if ((s & map.subset(vt)).size() == r - 1) buf.add({vs, vt});
      }
    }
  }
  return f;
}

/// Standard DIMACS CNF text.
inline std::string emit_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars()) + " " +
                    std::to_string(f.num_clauses()) + "\n";
  for (std::size_t c = 0; c < f.num_clauses(); ++c) {
    for (int l : f.clause(c)) {
      out += std::to_string(l);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Models.

/// The family of true variables, read without assuming it is a matroid.
struct DecodedModel {
  int r = 0;
  std::vector<ElementSet> family;  ///< lex order

  int n() const { return 2 * r; }
  ElementSet low() const { return ElementSet::range(r); }
  ElementSet high() const { return ElementSet::range(2 * r) - low(); }
  Matroid matroid() const {
    return Matroid::from_bases_unchecked(n(), r, family);
  }
};

/// value[v] for v in 1..C(2r, r); value[0] is ignored.
inline DecodedModel decode_model(const SubsetVarMap& map,
                                 const std::vector<bool>& value) {
  if (static_cast<int>(value.size()) != map.num_vars() + 1) {
    throw std::invalid_argument("assignment has " +
                                std::to_string(value.size() - 1) +
                                " variables, expected " +
                                std::to_string(map.num_vars()));
  }
  DecodedModel d;
  d.r = map.r();
  for (int v = 1; v <= map.num_vars(); ++v) {
    if (value[v]) d.family.push_back(map.subset(v));
  }
  std::sort(d.family.begin(), d.family.end(), LexLess{});
  return d;
}

/// Independent re-check of a model: the family is a matroid, both fixed
/// sets are bases, and the pair has no SI-ordering. The windows of family
/// (c) put b's into the base [r], so the pair is checked with E \ [r] in
/// the inserted role and [r] as the base.
inline bool verify_model(const DecodedModel& d) {
  if (!validate_basis_axiom(d.n(), d.r, d.family).holds) return false;
  const Matroid m = d.matroid();
  if (!m.is_basis(d.low()) || !m.is_basis(d.high())) return false;
  return !find_si_ordering(m, d.high(), d.low()).has_value();
}

/// Adds the clause excluding exactly this assignment.
inline void block_exact_model(CnfFormula& f, const std::vector<bool>& value) {
  std::vector<int> lits;
  for (int v = 1; v <= f.num_vars(); ++v) lits.push_back(value[v] ? -v : v);
  f.add(lits, 'x');
}

/// All relabelings of m's basis family by permutations of {0..n-1} in which
/// [r] and E \ [r] are both bases, sorted. Orbit enumeration by breadth-
/// first search with a transposition and an n-cycle; the orbit has
/// n! / |Aut(m)| members, which must not exceed max_orbit.
inline std::vector<std::vector<ElementSet::Mask>> fixed_pair_placements(
    const Matroid& m, std::uint64_t max_orbit = 2'000'000) {
  const int n = m.size();
  if (n != 2 * m.rank()) {
    throw std::invalid_argument("placements need a rank-r matroid on 2r elements");
  }
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
  const std::uint64_t orbit = fact / automorphism_count(m);
  if (orbit > max_orbit) {
    throw std::length_error("orbit of " + std::to_string(orbit) +
                            " relabelings exceeds the limit");
  }
  using Family = std::vector<ElementSet::Mask>;
  auto family_of = [](const std::vector<ElementSet>& sets) {
    Family f;
    for (ElementSet s : sets) f.push_back(s.bits());
    std::sort(f.begin(), f.end());
    return f;
  };
  auto apply = [&](const Family& f, const std::vector<int>& perm) {
    Family g;
    g.reserve(f.size());
    for (auto mask : f) {
      ElementSet t;
      for (int e : ElementSet(mask)) t = t.with(perm[e]);
      g.push_back(t.bits());
    }
    std::sort(g.begin(), g.end());
    return g;
  };
  std::vector<int> swap01(n), cycle(n);
  for (int i = 0; i < n; ++i) {
    swap01[i] = i;
    cycle[i] = (i + 1) % n;
  }
  if (n >= 2) std::swap(swap01[0], swap01[1]);

  std::set<Family> seen{family_of(m.bases())};
  std::deque<Family> queue{*seen.begin()};
  while (!queue.empty()) {
    Family f = std::move(queue.front());
    queue.pop_front();
    for (const auto* perm : {&swap01, &cycle}) {
      Family g = apply(f, *perm);
      if (seen.insert(g).second) queue.push_back(std::move(g));
    }
  }
  const auto low = ElementSet::range(m.rank()).bits();
  const auto high = ElementSet::range(n).bits() & ~low;
  std::vector<Family> out;
  for (const Family& f : seen) {
    if (std::binary_search(f.begin(), f.end(), low) &&
        std::binary_search(f.begin(), f.end(), high)) {
      out.push_back(f);
    }
  }
  return out;
}

/// Blocks every placement of m (up to relabeling) that keeps [r] and its
/// complement as bases. Returns the number of clauses added.
inline std::size_t block_isomorphs(CnfFormula& f, const Matroid& m) {
  const SubsetVarMap map(m.rank());
  if (f.num_vars() != map.num_vars()) {
    throw std::invalid_argument("matroid does not match the formula's variables");
  }
  const auto placements = fixed_pair_placements(m);
  for (const auto& fam : placements) {
    std::vector<bool> value(map.num_vars() + 1, false);
    for (auto mask : fam) value[map.var(ElementSet(mask))] = true;
    block_exact_model(f, value);
  }
  return placements.size();
}

}  // namespace matprox

#endif  // MATPROX_SATGEN_HPP
