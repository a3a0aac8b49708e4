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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "matprox/matprox.hpp"

namespace matprox {
namespace {

bool all_windows_are_bases(const Matroid& m, const OrderingPair& p) {
  for (int i = 1; i <= p.length(); ++i) {
    for (int j = i; j <= p.length(); ++j) {
      if (!m.is_basis(window_set(p, {i, j}))) return false;
    }
  }
  return true;
}

TEST(WindowTable, UniformIsAllTrue) {
  const Matroid u = make_uniform(2, 4);
  const SiWindowTable t = si_window_table(u, OrderingPair{{1, 0}, {3, 2}});
  EXPECT_TRUE(t.all());
  EXPECT_TRUE(t.failing().empty());
  EXPECT_EQ(t.to_rows(), "11\n1\n");
}

TEST(WindowTable, RejectsNonBases) {
  const Matroid m = make_graphic({3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}}});
  // {0,3} is a parallel pair, not a basis.
  EXPECT_THROW(si_window_table(m, OrderingPair{{0, 3}, {1, 2}}), std::invalid_argument);
}

TEST(R10Orderings, CorrectedOrderingsFailOnlyAtThreeThree) {
  const Matroid r10 = make_r10();
  for (int k = 1; k <= 5; ++k) {
    const SiWindowTable t = si_window_table(r10, r10_near_si_orderings(k));
    ASSERT_EQ(t.failing().size(), 1u) << "k=" << k;
    EXPECT_EQ(t.failing()[0], (Window{3, 3}));
  }
  // Rows (i,i)..(i,5); the single 0 is row 3, first entry.
  EXPECT_EQ(si_window_table(r10, r10_near_si_orderings(1)).to_rows(),
            "11111\n1111\n011\n11\n1\n");
}

TEST(R10Orderings, TransposedOrderingsFailAtOneThreeAndTwoThree) {
  const Matroid r10 = make_r10();
  for (int k = 1; k <= 5; ++k) {
    const SiWindowTable t = si_window_table(r10, r10_near_si_orderings_transposed(k));
    EXPECT_EQ(t.failing(), (std::vector<Window>{{1, 3}, {2, 3}})) << "k=" << k;
  }
  // k = 1: a = (v3v5, v1v3, v5v2, v4v1, v2v4), b = (v1v2, v3v4, v4v5, v2v3, v5v1).
  const OrderingPair p = r10_near_si_orderings_transposed(1);
  EXPECT_EQ(p.a, (std::vector<int>{k5_edge(3, 5), k5_edge(1, 3), k5_edge(5, 2), k5_edge(4, 1),
                                   k5_edge(2, 4)}));
  EXPECT_EQ(p.b, (std::vector<int>{k5_edge(1, 2), k5_edge(3, 4), k5_edge(4, 5), k5_edge(2, 3),
                                   k5_edge(5, 1)}));
  OrderingPair fixed = r10_near_si_orderings(1);
  std::swap(fixed.a[2], fixed.a[3]);
  EXPECT_EQ(fixed.a, p.a);
  EXPECT_EQ(fixed.b, p.b);
}

// Over all 5! orderings of A against the fixed b, only one table fails
// exactly at (3,3).
TEST(R10Orderings, CorrectionIsTheUniqueThreeThreeOrdering) {
  const Matroid r10 = make_r10();
  const OrderingPair transposed = r10_near_si_orderings_transposed(1);
  std::vector<int> a = transposed.a;
  std::sort(a.begin(), a.end());
  std::vector<std::vector<int>> hits;
  do {
    const auto f = si_window_table(r10, OrderingPair{a, transposed.b}).failing();
    if (f == std::vector<Window>{{3, 3}}) hits.push_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0], r10_near_si_orderings(1).a);
}

TEST(R10Orderings, ThreeThreeWindowsCoverThePentagram) {
  // a_3 over k = 1..5 is the pentagram v_i v_{i+2}; b_3 is the 5-cycle.
  ElementSet a3, b3;
  for (int k = 1; k <= 5; ++k) {
    const OrderingPair p = r10_near_si_orderings(k);
    a3 = a3.with(p.a[2]);
    b3 = b3.with(p.b[2]);
  }
  const auto [cycle, pentagram] = canonical_r10_pair();
  EXPECT_EQ(a3, pentagram);
  EXPECT_EQ(b3, cycle);
  // Hence psi(A) = psi(B) summed over k for any labeling: each window (3,3)
  // swaps b_3 for a_3.
}

TEST(R10Pair, CanonicalPairShape) {
  const Matroid r10 = make_r10();
  const auto [a, b] = canonical_r10_pair();
  EXPECT_TRUE(r10.is_basis(a));
  EXPECT_TRUE(r10.is_basis(b));
  EXPECT_FALSE(a.intersects(b));
  EXPECT_EQ(a | b, r10.ground());
  for (int i = 1; i <= 5; ++i) {
    EXPECT_TRUE(a.contains(k5_edge(i, i + 1)));
    EXPECT_TRUE(b.contains(k5_edge(i, i + 2)));
  }
}

TEST(R10Pair, NoSiOrderingEitherWay) {
  const Matroid r10 = make_r10();
  const auto [a, b] = canonical_r10_pair();
  EXPECT_FALSE(find_si_ordering(r10, a, b).has_value());
  EXPECT_FALSE(find_si_ordering(r10, b, a).has_value());
  EXPECT_FALSE(find_si_ordering_brute_force(r10, a, b).has_value());
}

TEST(R10Pair, GabowOrderingExists) {
  const Matroid r10 = make_r10();
  const auto [a, b] = canonical_r10_pair();
  const auto g = find_gabow_ordering(r10, a, b);
  ASSERT_TRUE(g.has_value());
  EXPECT_TRUE(is_gabow_ordering(r10, *g));
  EXPECT_EQ(g->a_set(), a);
  EXPECT_EQ(g->b_set(), b);
}

TEST(R10Pair, TransitivityOnDisjointPairs) {
  const PairTransitivityReport rep = verify_r10_pair_transitivity();
  EXPECT_EQ(rep.pairs, 72u);
  EXPECT_EQ(rep.mapped, 72u);
  EXPECT_TRUE(rep.holds());
  // Independent count of ordered disjoint basis pairs.
  const Matroid r10 = make_r10();
  std::size_t disjoint = 0;
  for (ElementSet x : r10.bases()) disjoint += r10.is_basis(r10.ground() - x) ? 1 : 0;
  EXPECT_EQ(disjoint, rep.pairs);
}

TEST(R10Pair, EveryDisjointPairLacksAnSiOrdering) {
  const Matroid r10 = make_r10();
  for (ElementSet a : r10.bases()) {
    const ElementSet b = r10.ground() - a;
    if (!r10.is_basis(b)) continue;
    EXPECT_FALSE(find_si_ordering(r10, a, b).has_value()) << to_string(a);
  }
}

TEST(Sibo, Verdicts) {
  const SiboVerdict r10 = is_sibo(make_r10());
  EXPECT_FALSE(r10.pass);
  EXPECT_FALSE(r10.a.intersects(r10.b));
  EXPECT_EQ(r10.to_string(), "FAIL A={0,1,2,4,6} B={3,5,7,8,9}");
  EXPECT_EQ(is_sibo(make_r10(), 3).to_string(), r10.to_string());
  EXPECT_TRUE(is_sibo(make_uniform(3, 6)).pass);
  const Matroid k4 = make_graphic({4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}});
  EXPECT_TRUE(is_sibo(k4).pass);
  EXPECT_EQ(is_sibo(k4).to_string(), "PASS");
}

TEST(Sibo, SearchAgreesWithBruteForce) {
  Rng rng(808);
  int pairs = 0, absent = 0;
  for (int t = 0; t < 60; ++t) {
    const int n = static_cast<int>(rng.between(4, 8));
    const int r = static_cast<int>(rng.between(2, std::min(4, n - 1)));
    const Matroid m = t % 2 ? random_sparse_paving(rng, n, r, 2, 3)
                            : random_linear(rng, r, n, 2);
    for (int s = 0; s < 4; ++s) {
      const ElementSet a = m.bases()[rng.below(m.basis_count())];
      const ElementSet b = m.bases()[rng.below(m.basis_count())];
      const auto fast = find_si_ordering(m, a, b);
      const auto brute = find_si_ordering_brute_force(m, a, b);
      EXPECT_EQ(fast.has_value(), brute.has_value());
      if (fast) {
        EXPECT_TRUE(all_windows_are_bases(m, *fast));
        EXPECT_EQ(fast->a_set(), a);
        EXPECT_EQ(fast->b_set(), b);
      } else {
        ++absent;
      }
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, 240);
  (void)absent;
}

TEST(Sibo, UniformPairsAlwaysOrderable) {
  const Matroid u = make_uniform(4, 8);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const ElementSet a = u.bases()[rng.below(u.basis_count())];
    const ElementSet b = u.bases()[rng.below(u.basis_count())];
    EXPECT_TRUE(find_si_ordering(u, a, b).has_value());
    EXPECT_TRUE(find_gabow_ordering(u, a, b).has_value());
  }
}

TEST(Sibo, SparsePavingSmallRanksPass) {
  Rng rng(909);
  for (int t = 0; t < 20; ++t) {
    const int n = static_cast<int>(rng.between(4, 8));
    const int r = static_cast<int>(rng.between(2, std::min(4, n - 2)));
    EXPECT_TRUE(is_sibo(random_sparse_paving(rng, n, r)).pass);
  }
}

TEST(Sibo, R10RestrictionIsTheOnlyObstructionUpToRankFour) {
  // Every pair in small random matroids of rank <= 4 has an SI-ordering.
  Rng rng(1001);
  for (int t = 0; t < 30; ++t) {
    const int r = static_cast<int>(rng.between(2, 4));
    const int n = static_cast<int>(rng.between(r + 1, 2 * r));
    const Matroid m = random_linear(rng, r, n, 3);
    EXPECT_TRUE(is_sibo(m).pass);
  }
}

TEST(Gabow, AgreesWithExhaustiveCheckOnSmallPairs) {
  Rng rng(1111);
  for (int t = 0; t < 40; ++t) {
    const Matroid m = random_linear(rng, 3, 6, 2);
    if (m.rank() < 2) continue;
    const ElementSet a = m.bases()[rng.below(m.basis_count())];
    const ElementSet b = m.bases()[rng.below(m.basis_count())];
    const auto g = find_gabow_ordering(m, a, b);
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE(is_gabow_ordering(m, *g));
  }
}

}  // namespace
}  // namespace matprox
