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

#ifndef MATPROX_CONSTRUCTIONS_HPP
#define MATPROX_CONSTRUCTIONS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matprox/element_set.hpp"
#include "matprox/matroid.hpp"

namespace matprox {

/// Explicit basis lists above this size are refused.
inline constexpr std::uint64_t kMaxExplicitBases = std::uint64_t{1} << 24;

/// U_{r,n}: every r-subset of {0..n-1} is a basis.
inline Matroid make_uniform(int r, int n) {
  if (n < 1 || n > kMaxElements) {
    throw std::invalid_argument("uniform matroid needs 1 <= n <= 64");
  }
  if (r < 0 || r > n) {
    throw std::invalid_argument("uniform matroid needs 0 <= r <= n, got r=" +
                                std::to_string(r) + " n=" + std::to_string(n));
  }
  if (binomial(n, r) > kMaxExplicitBases) {
    throw std::length_error("U_{" + std::to_string(r) + "," +
                            std::to_string(n) +
                            "} has too many bases to list explicitly");
  }
  return Matroid::from_bases_unchecked(n, r, all_subsets(n, r));
}

/// Bases are all r-sets except the hyperplanes.
inline Matroid make_sparse_paving(const SparsePavingRep& rep) {
  rep.validate();
  if (binomial(rep.n, rep.r) > kMaxExplicitBases) {
    throw std::length_error("sparse paving matroid too large to list");
  }
  std::vector<ElementSet> excluded = rep.hyperplanes;
  std::sort(excluded.begin(), excluded.end());
  std::vector<ElementSet> bases;
  for_each_subset(rep.n, rep.r, [&](ElementSet s) {
    if (!std::binary_search(excluded.begin(), excluded.end(), s)) {
      bases.push_back(s);
    }
  });
  if (bases.empty()) {
    throw std::invalid_argument("every r-set is a hyperplane; no bases left");
  }
  return Matroid::from_bases(rep.n, rep.r, std::move(bases));
}

/// A multigraph; edge index = position in `edges`.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace detail

/// The cycle matroid of a connected loopless graph: bases are spanning trees.
inline Matroid make_graphic(const Graph& g) {
  if (g.vertices < 1) throw std::invalid_argument("graph has no vertices");
  const int m = static_cast<int>(g.edges.size());
  if (m > kMaxElements) throw std::invalid_argument("graph has > 64 edges");
  detail::UnionFind all(g.vertices);
  for (int i = 0; i < m; ++i) {
    const auto [u, v] = g.edges[i];
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) {
      throw std::invalid_argument("edge " + std::to_string(i) +
                                  " has an endpoint outside the vertex range");
    }
    if (u == v) {
      throw std::invalid_argument("edge " + std::to_string(i) + " is a loop");
    }
    all.unite(u, v);
  }
  int components = 0;
  for (int v = 0; v < g.vertices; ++v) components += all.find(v) == v ? 1 : 0;
  if (components != 1) {
    throw std::invalid_argument("graph is disconnected (" +
                                std::to_string(components) + " components)");
  }
  const int r = g.vertices - 1;
  if (binomial(m, r) > kMaxExplicitBases) {
    throw std::length_error("graph has too many edge subsets to enumerate");
  }
  std::vector<ElementSet> trees;
  for_each_subset(m, r, [&](ElementSet s) {
    detail::UnionFind uf(g.vertices);
    for (int e : s) {
      if (!uf.unite(g.edges[e].first, g.edges[e].second)) return;
    }
    trees.push_back(s);
  });
  return Matroid::from_bases(m, r, std::move(trees));
}

// ---------------------------------------------------------------------------
// R10 as the even-cycle matroid of K5.
//
// Vertices v1..v5 are 1-based. Edge ids follow
//   0:v1v2 1:v1v3 2:v1v4 3:v1v5 4:v2v3 5:v2v4 6:v2v5 7:v3v4 8:v3v5 9:v4v5.

/// The K5 edge order used by make_r10, as 1-based vertex pairs.
inline constexpr std::array<std::pair<int, int>, 10> kK5Edges = {{
    {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
    {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5},
}};

/// Edge id of v_u v_w in K5. Vertex indices are taken cyclically, so 6 means
/// v1 and 0 means v5.
inline int k5_edge(int u, int w) {
  auto wrap = [](int v) { return ((v - 1) % 5 + 5) % 5 + 1; };
  u = wrap(u);
  w = wrap(w);
  if (u == w) throw std::invalid_argument("K5 has no loops");
  if (u > w) std::swap(u, w);
  for (int i = 0; i < 10; ++i) {
    if (kK5Edges[i] == std::pair{u, w}) return i;
  }
  throw std::logic_error("unreachable");
}

namespace detail {

/// A 5-edge subgraph of K5 contains exactly one cycle, and that cycle is odd,
/// iff it is connected (so spanning and unicyclic) and not bipartite.
inline bool is_r10_basis(ElementSet edges) {
  if (edges.size() != 5) return false;
  UnionFind uf(5);
  for (int e : edges) uf.unite(kK5Edges[e].first - 1, kK5Edges[e].second - 1);
  const int root = uf.find(0);
  for (int v = 1; v < 5; ++v) {
    if (uf.find(v) != root) return false;
  }
  std::array<int, 5> side{-1, -1, -1, -1, -1};
  side[0] = 0;
  for (int round = 0; round < 5; ++round) {
    for (int e : edges) {
      const int a = kK5Edges[e].first - 1;
      const int b = kK5Edges[e].second - 1;
      if (side[a] >= 0 && side[b] < 0) side[b] = 1 - side[a];
      if (side[b] >= 0 && side[a] < 0) side[a] = 1 - side[b];
    }
  }
  for (int e : edges) {
    if (side[kK5Edges[e].first - 1] == side[kK5Edges[e].second - 1]) {
      return true;  // odd cycle
    }
  }
  return false;
}

}  // namespace detail

/// R10: ground set = the 10 edges of K5 (order kK5Edges); bases are the
/// 5-edge sets containing exactly one cycle, which is odd.
inline Matroid make_r10() {
  std::vector<ElementSet> bases;
  for_each_subset(10, 5, [&](ElementSet s) {
    if (detail::is_r10_basis(s)) bases.push_back(s);
  });
  return Matroid::from_bases(10, 5, std::move(bases));
}

// ---------------------------------------------------------------------------
// Linear matroids over a prime field.

namespace detail {

inline std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t result = 1;
  a %= p;
  while (e > 0) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

/// Rank over GF(p) of the given columns of a row-major matrix.
inline int column_rank_mod_p(const std::vector<std::vector<std::int64_t>>& a,
                             ElementSet columns, std::int64_t p) {
  const int rows = static_cast<int>(a.size());
  std::vector<std::vector<std::int64_t>> m;
  for (int c : columns) {
    std::vector<std::int64_t> col(rows);
    for (int i = 0; i < rows; ++i) col[i] = ((a[i][c] % p) + p) % p;
    m.push_back(std::move(col));
  }
  int rank = 0;
  const int cols = static_cast<int>(m.size());
  for (int row = 0; row < rows && rank < cols; ++row) {
    int pivot = -1;
    for (int c = rank; c < cols; ++c) {
      if (m[c][row] != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    const std::int64_t inv = mod_pow(m[rank][row], p - 2, p);
    for (int c = 0; c < cols; ++c) {
      if (c == rank || m[c][row] == 0) continue;
      const std::int64_t factor = m[c][row] * inv % p;
      for (int i = 0; i < rows; ++i) {
        m[c][i] = ((m[c][i] - factor * m[rank][i]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Column matroid of a matrix over GF(p), p prime. The rank is the rank of
/// the whole matrix; bases are the column sets attaining it.
inline Matroid make_linear(const std::vector<std::vector<std::int64_t>>& rows,
                           std::int64_t p) {
  if (p < 2) throw std::invalid_argument("field size must be a prime >= 2");
  if (rows.empty()) throw std::invalid_argument("matrix has no rows");
  const int n = static_cast<int>(rows.front().size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("ragged matrix");
    }
  }
  if (n < 1 || n > kMaxElements) {
    throw std::invalid_argument("matrix needs 1..64 columns");
  }
  const int r = detail::column_rank_mod_p(rows, ElementSet::range(n), p);
  std::vector<ElementSet> bases;
  for_each_subset(n, r, [&](ElementSet s) {
    if (detail::column_rank_mod_p(rows, s, p) == r) bases.push_back(s);
  });
  return Matroid::from_bases(n, r, std::move(bases));
}

}  // namespace matprox

#endif  // MATPROX_CONSTRUCTIONS_HPP
