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

// Seeded instance generators. Draws go through mt19937_64 and an explicit
// bounded-integer routine, so a seed gives the same instance on every
// platform.

#ifndef MATPROX_RANDOM_HPP
#define MATPROX_RANDOM_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matprox/constructions.hpp"
#include "matprox/element_set.hpp"
#include "matprox/labels.hpp"
#include "matprox/matroid.hpp"
#include "matprox/multilabel.hpp"

namespace matprox {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound), bound >= 1, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// A random stable set of J(n, r): r-sets visited in random order, each
/// kept with probability num/den when it meets no kept set in r-1 elements.
/// At most C(n,r) - 1 hyperplanes, so the matroid has a basis.
inline SparsePavingRep random_sparse_paving_rep(Rng& rng, int n, int r,
                                                std::uint64_t num = 1,
                                                std::uint64_t den = 2) {
  std::vector<ElementSet> all = all_subsets(n, r);
  rng.shuffle(all);
  std::vector<ElementSet> kept;
  for (ElementSet s : all) {
    if (kept.size() + 1 >= all.size()) break;
    if (!rng.chance(num, den)) continue;
    bool ok = true;
    for (ElementSet h : kept) {
      if ((s & h).size() >= r - 1) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), LexLess{});
  return {n, r, kept};
}

inline Matroid random_sparse_paving(Rng& rng, int n, int r,
                                    std::uint64_t num = 1,
                                    std::uint64_t den = 2) {
  return make_sparse_paving(random_sparse_paving_rep(rng, n, r, num, den));
}

/// Column matroid of a random rows x cols matrix over GF(p).
inline Matroid random_linear(Rng& rng, int rows, int cols, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (auto& row : a) {
    for (auto& x : row) x = rng.between(0, p - 1);
  }
  return make_linear(a, p);
}

/// A random spanning tree on v vertices plus `extra` random non-loop edges.
inline Graph random_connected_graph(Rng& rng, int v, int extra) {
  Graph g{v, {}};
  for (int i = 1; i < v; ++i) {
    g.edges.emplace_back(static_cast<int>(rng.below(i)), i);
  }
  for (int i = 0; i < extra && v >= 2; ++i) {
    const int a = static_cast<int>(rng.below(v));
    int b = static_cast<int>(rng.below(v - 1));
    if (b >= a) ++b;
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return g;
}

/// Uniform element of a finite group, or of [-bound, bound] per Z factor.
inline GroupElement random_element(Rng& rng, const AbelianGroup& g,
                                   std::int64_t bound = 5) {
  std::vector<std::int64_t> raw;
  for (int i = 0; i < g.factor_count(); ++i) {
    const std::int64_t m = g.factor_modulus(i);
    raw.push_back(m == 0 ? rng.between(-bound, bound) : rng.between(0, m - 1));
  }
  return g.make(raw);
}

inline Labeling random_labeling(Rng& rng, const AbelianGroup& g, int n,
                                std::int64_t bound = 5) {
  std::vector<GroupElement> v;
  for (int e = 0; e < n; ++e) v.push_back(random_element(rng, g, bound));
  return Labeling(g, std::move(v));
}

/// `size` distinct random elements (fewer if the group is smaller).
inline ForbiddenSet random_forbidden(Rng& rng, const AbelianGroup& g, int size,
                                     std::int64_t bound = 5) {
  std::vector<GroupElement> v;
  int attempts = 0;
  while (static_cast<int>(v.size()) < size && attempts++ < 100 * (size + 1)) {
    GroupElement x = random_element(rng, g, bound);
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  }
  return ForbiddenSet(g, std::move(v));
}

}  // namespace matprox

#endif  // MATPROX_RANDOM_HPP
