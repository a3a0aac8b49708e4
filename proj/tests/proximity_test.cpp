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

#include <map>
#include <numeric>

#include "matprox/matprox.hpp"

namespace matprox {
namespace {

LabeledInstance make_instance(const Matroid& m, const AbelianGroup& g,
                              std::vector<std::int64_t> labels,
                              std::vector<std::int64_t> forbidden) {
  return LabeledInstance(m, Labeling::from_values(g, labels),
                         ForbiddenSet::from_values(g, forbidden));
}

/// Independent radius: scan every r-subset, not the basis list.
std::optional<int> radius_by_subsets(const LabeledInstance& inst, ElementSet a) {
  std::optional<int> best;
  for_each_subset(inst.matroid.size(), inst.matroid.rank(), [&](ElementSet s) {
    if (!inst.matroid.is_basis(s) || !inst.avoids(s)) return;
    const int d = (a - s).size();
    if (!best || d < *best) best = d;
  });
  return best;
}

// --- Windows ------------------------------------------------------------------

TEST(Windows, WindowSets) {
  const OrderingPair p{{0, 1, 2}, {3, 4, 5}};
  EXPECT_EQ(window_set(p, {1, 3}), (ElementSet{0, 1, 2}));
  EXPECT_EQ(window_set(p, {1, 1}), (ElementSet{0, 4, 5}));
  EXPECT_EQ(window_set(p, {2, 3}), (ElementSet{3, 1, 2}));
  EXPECT_THROW(window_set(p, {3, 2}), std::out_of_range);
  EXPECT_EQ(to_string(Window{2, 3}), "(2,3)");
}

TEST(Windows, OrderingPairValidation) {
  EXPECT_NO_THROW((OrderingPair{{0, 5}, {1, 5}}.validate()));
  EXPECT_THROW((OrderingPair{{0, 5}, {5, 1}}.validate()), std::invalid_argument);
  EXPECT_THROW((OrderingPair{{0, 0}, {1, 2}}.validate()), std::invalid_argument);
  EXPECT_THROW((OrderingPair{{0}, {1, 2}}.validate()), std::invalid_argument);
}

// --- Avoiding bases and radius ----------------------------------------------------

TEST(Proximity, AvoidingBasisExamples) {
  const AbelianGroup z2 = AbelianGroup::cyclic(2);
  const Matroid u12 = make_uniform(1, 2);
  EXPECT_EQ(find_avoiding_basis(make_instance(u12, z2, {0, 1}, {0})), (ElementSet{1}));
  EXPECT_EQ(find_avoiding_basis(make_instance(u12, z2, {0, 1}, {})), (ElementSet{0}));
  EXPECT_FALSE(find_avoiding_basis(make_instance(u12, z2, {1, 1}, {1})).has_value());
}

TEST(Proximity, RadiusExamples) {
  const AbelianGroup z2 = AbelianGroup::cyclic(2);
  const LabeledInstance inst = make_instance(make_uniform(2, 4), z2, {0, 0, 1, 1}, {0});
  EXPECT_EQ(proximity_radius(inst, ElementSet{0, 1}), 1);
  EXPECT_EQ(proximity_radius(inst, ElementSet{0, 2}), 0);
  EXPECT_THROW(proximity_radius(inst, ElementSet{0}), std::invalid_argument);
  // Reduced form: the complement is the only avoiding basis, radius r.
  const LabeledInstance red = make_instance(make_uniform(1, 2), z2, {0, 1}, {0});
  EXPECT_EQ(proximity_radius(red, ElementSet{0}), 1);
}

TEST(Proximity, RadiusAgreesWithSubsetScan) {
  Rng rng(101);
  for (int t = 0; t < 300; ++t) {
    const int n = static_cast<int>(rng.between(2, 8));
    const Matroid m = t % 2 ? random_sparse_paving(rng, n, static_cast<int>(rng.between(1, n - 1)))
                            : random_linear(rng, static_cast<int>(rng.between(1, 3)), n, 3);
    if (m.rank() == 0) continue;
    const AbelianGroup g = AbelianGroup::cyclic(rng.between(2, 5));
    const LabeledInstance inst(m, random_labeling(rng, g, n),
                               random_forbidden(rng, g, static_cast<int>(rng.between(1, 3))));
    for (ElementSet a : m.bases()) {
      EXPECT_EQ(proximity_radius(inst, a), radius_by_subsets(inst, a));
    }
  }
}

TEST(Proximity, BoundVerdicts) {
  const AbelianGroup z2 = AbelianGroup::cyclic(2);
  const LabeledInstance empty_f = make_instance(make_uniform(2, 4), z2, {0, 1, 0, 1}, {});
  EXPECT_TRUE(check_proximity_bound(empty_f).pass);
  const LabeledInstance none = make_instance(make_uniform(1, 3), z2, {1, 1, 1}, {1});
  const ProximityVerdict v = check_proximity_bound(none);
  EXPECT_TRUE(v.pass);
  EXPECT_TRUE(v.vacuous);
  EXPECT_EQ(v.to_string(), "PASS");
}

TEST(Proximity, ViolationIsReportedOnANonMatroidFamily) {
  // {0,1} and {2,3} only: not a matroid, so the bound can fail.
  const Matroid fake = Matroid::from_bases_unchecked(4, 2, {{0, 1}, {2, 3}});
  const LabeledInstance inst = make_instance(fake, AbelianGroup::integers(), {1, 1, 0, 0}, {2});
  const ProximityVerdict v = check_proximity_bound(inst);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.witness, (ElementSet{0, 1}));
  EXPECT_EQ(v.radius, 2);
  EXPECT_EQ(v.to_string(), "FAIL witness={0,1} radius=2 bound=1");
  for (int w : {2, 4}) EXPECT_EQ(check_proximity_bound(inst, w).witness, v.witness);
}

TEST(Proximity, BoundHoldsOnSparsePavingAndUniform) {
  Rng rng(202);
  for (int t = 0; t < 400; ++t) {
    const int n = static_cast<int>(rng.between(2, 9));
    const int r = static_cast<int>(rng.between(1, n - 1));
    const Matroid m = t % 3 == 0 ? make_uniform(r, n) : random_sparse_paving(rng, n, r);
    const AbelianGroup g = AbelianGroup::cyclic(rng.between(2, 6));
    const LabeledInstance inst(m, random_labeling(rng, g, n),
                               random_forbidden(rng, g, static_cast<int>(rng.between(1, 3))));
    const ProximityVerdict v = check_proximity_bound(inst);
    EXPECT_TRUE(v.pass) << v.to_string();
    EXPECT_EQ(check_proximity_bound(inst, 3).pass, v.pass);
  }
}

// --- Pigeonhole window ---------------------------------------------------------------

TEST(Pigeonhole, FirstPrefixHit) {
  const AbelianGroup z = AbelianGroup::integers();
  const OrderingPair p{{0, 1}, {2, 3}};
  const Labeling psi = Labeling::from_values(z, {1, 1, 0, 0});
  EXPECT_EQ(pigeonhole_window(p, psi, ForbiddenSet::from_values(z, {5})), (Window{1, 1}));
}

TEST(Pigeonhole, HandCheckedPrefixScan) {
  const AbelianGroup z3 = AbelianGroup::cyclic(3);
  const OrderingPair p{{0, 1, 2}, {3, 4, 5}};
  const Labeling psi = Labeling::from_values(z3, {1, 2, 0, 0, 0, 0});
  EXPECT_EQ(pigeonhole_window(p, psi, ForbiddenSet::from_values(z3, {1, 2})), (Window{1, 2}));
}

TEST(Pigeonhole, RepeatedPrefixGivesLabelOfB) {
  // Z_4, psi(B) = 0, F = {1, 2}, steps a_i - b_i = 1, 1, 3 give prefixes
  // 1, 2, 1 (psi(A) = 1 in F): all prefixes forbidden, prefixes 1 and 3
  // coincide, window (2,3) has label psi(B).
  const AbelianGroup z4 = AbelianGroup::cyclic(4);
  const OrderingPair p{{0, 1, 2}, {3, 4, 5}};
  const Labeling psi = Labeling::from_values(z4, {1, 1, 3, 0, 0, 0});
  const ForbiddenSet f = ForbiddenSet::from_values(z4, {1, 2});
  const Window w = pigeonhole_window(p, psi, f);
  EXPECT_EQ(w, (Window{2, 3}));
  EXPECT_EQ(group_sum(psi, window_set(p, w)), group_sum(psi, p.b_set()));
}

TEST(Pigeonhole, StatementNeedsPsiAInF) {
  // psi(A) avoids F and every window other than A is forbidden.
  const AbelianGroup z = AbelianGroup::integers();
  const OrderingPair p{{0, 1}, {2, 3}};
  const Labeling psi = Labeling::from_values(z, {0, -1, 1, 0});
  const ForbiddenSet f = ForbiddenSet::from_values(z, {0});
  EXPECT_FALSE(f.contains(group_sum(psi, p.b_set())));
  EXPECT_FALSE(f.contains(group_sum(psi, p.a_set())));
  EXPECT_TRUE(f.contains(group_sum(psi, window_set(p, {1, 1}))));
  EXPECT_TRUE(f.contains(group_sum(psi, window_set(p, {2, 2}))));
  EXPECT_THROW(pigeonhole_window(p, psi, f), std::domain_error);
}

TEST(Pigeonhole, RejectsBadInput) {
  const AbelianGroup z = AbelianGroup::integers();
  const Labeling psi = Labeling::from_values(z, {0, 0, 0, 0});
  const OrderingPair p{{0, 1}, {2, 3}};
  EXPECT_THROW(pigeonhole_window(p, psi, ForbiddenSet::from_values(z, {0})),
               std::invalid_argument);  // B forbidden
  EXPECT_THROW(pigeonhole_window(p, psi, ForbiddenSet::from_values(z, {1, 2})),
               std::invalid_argument);  // r != |F| + 1
  EXPECT_THROW(pigeonhole_window(OrderingPair{{0, 1}, {0, 3}}, psi,
                                 ForbiddenSet::from_values(z, {1})),
               std::invalid_argument);  // not disjoint
}

TEST(Pigeonhole, ValidWindowsOnRandomInputs) {
  Rng rng(303);
  int checked = 0;
  while (checked < 3000) {
    const int r = static_cast<int>(rng.between(2, 6));
    const AbelianGroup g = AbelianGroup::cyclic(rng.between(r, 9));
    std::vector<int> ids(2 * r);
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    const OrderingPair p{{ids.begin(), ids.begin() + r}, {ids.begin() + r, ids.end()}};
    const Labeling psi = random_labeling(rng, g, 2 * r);
    const GroupElement sa = group_sum(psi, p.a_set()), sb = group_sum(psi, p.b_set());
    if (sa == sb) continue;
    std::vector<GroupElement> fv{sa};
    for (std::uint64_t i = 0; i < g.order() && static_cast<int>(fv.size()) < r - 1; ++i) {
      const GroupElement x = g.element_at((i + rng.below(g.order())) % g.order());
      if (x != sb && std::find(fv.begin(), fv.end(), x) == fv.end()) fv.push_back(x);
    }
    if (static_cast<int>(fv.size()) != r - 1) continue;
    const ForbiddenSet f(g, fv);
    const Window w = pigeonhole_window(p, psi, f);
    EXPECT_FALSE(w.i == 1 && w.j == r);
    EXPECT_FALSE(f.contains(group_sum(psi, window_set(p, w))));
    ++checked;
  }
}

// --- Reduced form --------------------------------------------------------------

TEST(ReducedForm, Examples) {
  const AbelianGroup z2 = AbelianGroup::cyclic(2);
  const LabeledInstance red = make_instance(make_uniform(1, 2), z2, {0, 1}, {0});
  EXPECT_TRUE(check_reduced_form(red, ElementSet{1}, 1));
  EXPECT_FALSE(check_reduced_form(red, ElementSet{1}));  // default rank |F|+1 = 2
  const LabeledInstance two = make_instance(make_uniform(1, 3), z2, {0, 1, 1}, {0});
  EXPECT_FALSE(check_reduced_form(two, ElementSet{1}, 1));
  const auto [ml, a] = lower_bound_instance(1);
  const LabeledInstance lb(ml.matroid, ml.constraints[0].psi,
                           ForbiddenSet(ml.constraints[0].psi.group, {ml.constraints[0].f}));
  EXPECT_TRUE(check_reduced_form(lb, ml.matroid.ground() - a, 1));
}

TEST(ReducedForm, WitnessStatuses) {
  const AbelianGroup z2 = AbelianGroup::cyclic(2);
  const LabeledInstance red = make_instance(make_uniform(1, 2), z2, {0, 1}, {0});
  EXPECT_EQ(find_reduced_witness(red, ElementSet{0}).status,
            ReducedWitness::Status::kNotCounterexample);
  const ReducedWitness same = find_reduced_witness(red, ElementSet{0}, ReductionTarget::kRadius);
  ASSERT_EQ(same.status, ReducedWitness::Status::kFound);
  EXPECT_EQ(same.kept, (ElementSet{0, 1}));
  EXPECT_TRUE(same.contracted.empty());
  const LabeledInstance none = make_instance(make_uniform(1, 2), z2, {0, 0}, {0});
  EXPECT_EQ(find_reduced_witness(none, ElementSet{0}).status,
            ReducedWitness::Status::kNoAvoidingBasis);
  EXPECT_EQ(ReducedWitness::status_name(ReducedWitness::Status::kTruncated), "TRUNCATED");
}

TEST(ReducedForm, RecoversAnEmbeddedForm) {
  // U_{1,2} reduced form plus one element to contract, inside U_{2,3}.
  const AbelianGroup z3 = AbelianGroup::cyclic(3);
  const LabeledInstance inst = make_instance(make_uniform(2, 3), z3, {0, 1, 1}, {1});
  const ReducedWitness w = find_reduced_witness(inst, ElementSet{0, 1}, ReductionTarget::kRadius);
  ASSERT_EQ(w.status, ReducedWitness::Status::kFound);
  EXPECT_EQ(w.contracted.size(), 1);
  EXPECT_TRUE(find_isomorphism(w.minor.matroid, make_uniform(1, 2)).has_value());
  EXPECT_TRUE(check_reduced_form(*w.instance, w.basis, 1));
  // B' ∪ Y avoids F in the original matroid.
  EXPECT_TRUE(inst.avoids(w.minor.to_old(w.basis) | w.contracted));
}

TEST(ReducedForm, RandomWitnessesAreReduced) {
  Rng rng(404);
  int found = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(rng.between(3, 7));
    const Matroid m = random_sparse_paving(rng, n, static_cast<int>(rng.between(1, n - 1)));
    const AbelianGroup g = AbelianGroup::cyclic(rng.between(2, 4));
    const LabeledInstance inst(m, random_labeling(rng, g, n), random_forbidden(rng, g, 1));
    const ElementSet a = m.bases()[rng.below(m.basis_count())];
    const ReducedWitness w = find_reduced_witness(inst, a, ReductionTarget::kRadius);
    if (w.status != ReducedWitness::Status::kFound) continue;
    ++found;
    EXPECT_TRUE(check_reduced_form(*w.instance, w.basis, w.minor.matroid.rank()));
    EXPECT_TRUE(inst.avoids(w.minor.to_old(w.basis) | w.contracted));
    // B' ∪ Y is a basis of M|X.
    const ElementSet lifted = w.minor.to_old(w.basis) | w.contracted;
    EXPECT_TRUE(lifted.is_subset_of(w.kept));
    EXPECT_TRUE(is_independent(m, lifted));
    EXPECT_EQ(rank_of(m, w.kept), lifted.size());
  }
  EXPECT_GT(found, 0);
}

// --- Color-class orderings -------------------------------------------------------

TEST(Coloring, CheckerExamples) {
  const Partition c(4, {{0, 2}, {1, 3}});
  const OrderingPair p{{0, 1}, {2, 3}};
  // (1,1) = {0,3}, (2,2) = {1,2}: neither is a union of classes.
  EXPECT_TRUE(check_no_window_is_union(p, c));
  const Partition singletons(4, {{0}, {1}, {2}, {3}});
  EXPECT_FALSE(check_no_window_is_union(p, singletons));
  const OrderingPair one{{0}, {1}};
  EXPECT_TRUE(check_no_window_is_union(one, Partition(2, {{0}, {1}})));
}

TEST(Coloring, SingleBlockAndSmallCases) {
  const Partition all(6, {ElementSet::range(6)});
  const OrderingPair p = coloring_ordering(ElementSet{0, 1, 2}, ElementSet{3, 4, 5}, all);
  EXPECT_TRUE(check_no_window_is_union(p, all));
  EXPECT_THROW(coloring_ordering(ElementSet{0, 1}, ElementSet{1, 2}, Partition(3, {{0, 1, 2}})),
               std::invalid_argument);
}

TEST(Coloring, RandomColoringsWithinTheBound) {
  Rng rng(505);
  for (int t = 0; t < 2000; ++t) {
    const int r = static_cast<int>(rng.between(1, 7));
    // A on 0..r-1, B on r..2r-1; classes drawn per side then merged at random.
    const int p = static_cast<int>(rng.between(1, r));
    const int q = static_cast<int>(rng.between(1, r + 1 - p));
    std::vector<int> ca(r), cb(r);
    for (int i = 0; i < r; ++i) ca[i] = i < p ? i : static_cast<int>(rng.below(p));
    for (int i = 0; i < r; ++i) cb[i] = i < q ? i : static_cast<int>(rng.below(q));
    rng.shuffle(ca);
    rng.shuffle(cb);
    // Each B color either gets its own class or joins an A class.
    std::vector<int> join(q);
    for (int j = 0; j < q; ++j) join[j] = rng.chance(1, 2) ? static_cast<int>(rng.below(p)) : -1;
    std::vector<ElementSet> blocks(p + q);
    for (int i = 0; i < r; ++i) blocks[ca[i]] = blocks[ca[i]].with(i);
    for (int i = 0; i < r; ++i) {
      const int cls = join[cb[i]] >= 0 ? join[cb[i]] : p + cb[i];
      blocks[cls] = blocks[cls].with(r + i);
    }
    std::erase_if(blocks, [](ElementSet s) { return s.empty(); });
    const Partition c(2 * r, blocks);
    const OrderingPair o = coloring_ordering(ElementSet::range(r),
                                             ElementSet::range(2 * r) - ElementSet::range(r), c);
    EXPECT_EQ(o.a_set(), ElementSet::range(r));
    EXPECT_TRUE(check_no_window_is_union(o, c)) << "t=" << t;
  }
}

// --- Label-class dichotomy --------------------------------------------------------

struct UniqueInstance {
  LabeledInstance inst;
  ElementSet b;
};

/// Sparse paving matroid with F = every basis label except one that exactly
/// one basis attains.
std::optional<UniqueInstance> unique_avoiding_instance(Rng& rng) {
  const int n = static_cast<int>(rng.between(4, 8));
  const int r = static_cast<int>(rng.between(2, n - 2));
  const Matroid m = random_sparse_paving(rng, n, r);
  const AbelianGroup g = AbelianGroup::cyclic(rng.between(3, 12));
  const Labeling psi = random_labeling(rng, g, n);
  std::map<GroupElement, std::vector<ElementSet>> by_label;
  for (ElementSet b : m.bases()) by_label[group_sum(psi, b)].push_back(b);
  std::vector<GroupElement> forbidden;
  std::optional<ElementSet> unique;
  for (const auto& [label, bases] : by_label) {
    if (!unique && bases.size() == 1) {
      unique = bases.front();
    } else {
      forbidden.push_back(label);
    }
  }
  if (!unique) return std::nullopt;
  return UniqueInstance{LabeledInstance(m, psi, ForbiddenSet(g, forbidden)), *unique};
}

TEST(Dichotomy, HoldsOnRandomUniqueInstances) {
  Rng rng(606);
  int sets = 0;
  for (int t = 0; t < 300; ++t) {
    const auto u = unique_avoiding_instance(rng);
    if (!u) continue;
    ASSERT_EQ(avoiding_bases(u->inst), (std::vector<ElementSet>{u->b}));
    for_each_subset(u->inst.matroid.size(), u->inst.matroid.rank(), [&](ElementSet x) {
      if (x == u->b || !u->inst.avoids(x)) return;
      ++sets;
      EXPECT_TRUE(check_label_class_dichotomy(u->inst, u->b, x));
    });
  }
  EXPECT_GT(sets, 100);
}

TEST(Dichotomy, UnionOfClassesBranch) {
  // Labels: class {0,1} = 1, class {2,3} = 2 in Z_7; X = {0,1} is a union.
  const AbelianGroup z7 = AbelianGroup::cyclic(7);
  const LabeledInstance inst = make_instance(make_uniform(2, 4), z7, {1, 1, 2, 2}, {3});
  EXPECT_TRUE(check_label_class_dichotomy(inst, ElementSet{2, 3}, ElementSet{0, 1}));
  EXPECT_THROW(check_label_class_dichotomy(inst, ElementSet{2, 3}, ElementSet{2, 3}),
               std::invalid_argument);
  EXPECT_THROW(check_label_class_dichotomy(inst, ElementSet{2, 3}, ElementSet{0, 2}),
               std::invalid_argument);  // label 3 is forbidden
}

TEST(Dichotomy, MutationIsDetected) {
  // Classes {0}, {1}, {2,3}; B = {0,1}; X = {0,2} avoids F, is not a union
  // of classes, and B △ X = {1,2} is not a class. Impossible in a genuine
  // unique-avoiding sparse paving instance, so the family here is corrupted.
  const AbelianGroup z = AbelianGroup::integers();
  const Matroid corrupted = Matroid::from_bases_unchecked(4, 2, {{0, 1}, {0, 3}, {1, 2}});
  const LabeledInstance inst = make_instance(corrupted, z, {1, 2, 4, 4}, {9});
  EXPECT_FALSE(check_label_class_dichotomy(inst, ElementSet{0, 1}, ElementSet{0, 2}));
  // With all labels distinct every set is a union of singleton classes.
  const LabeledInstance distinct = make_instance(corrupted, z, {1, 2, 4, 8}, {9});
  EXPECT_TRUE(check_label_class_dichotomy(distinct, ElementSet{0, 1}, ElementSet{0, 2}));
}

}  // namespace
}  // namespace matprox
