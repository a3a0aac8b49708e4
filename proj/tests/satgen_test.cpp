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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "matprox/matprox.hpp"

namespace matprox {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  pclose(p);
  return out;
}

std::vector<bool> assignment_of(const SubsetVarMap& map, const std::vector<ElementSet>& family) {
  std::vector<bool> v(map.num_vars() + 1, false);
  for (ElementSet s : family) v[map.var(s)] = true;
  return v;
}

TEST(VarMap, ColexNumbering) {
  const SubsetVarMap m(2);
  EXPECT_EQ(m.num_vars(), 6);
  EXPECT_EQ(m.var(ElementSet{0, 1}), 1);
  EXPECT_EQ(m.var(ElementSet{0, 2}), 2);
  EXPECT_EQ(m.var(ElementSet{1, 2}), 3);
  EXPECT_EQ(m.var(ElementSet{2, 3}), 6);
  EXPECT_THROW(m.var(ElementSet{0}), std::invalid_argument);
  EXPECT_THROW(m.var(ElementSet{0, 4}), std::invalid_argument);
  EXPECT_THROW(m.subset(7), std::out_of_range);
}

TEST(VarMap, RoundTrip) {
  for (int r = 1; r <= 5; ++r) {
    const SubsetVarMap m(r);
    for (int v = 1; v <= m.num_vars(); ++v) {
      EXPECT_EQ(m.var(m.subset(v)), v);
      EXPECT_EQ(m.subset(v).size(), r);
    }
  }
}

TEST(Cnf, FamilySizesRankThree) {
  const CnfFormula f = build_non_sibo_cnf(3);
  EXPECT_EQ(f.num_vars(), 20);
  // Ordered pairs (a, b) at distance d contribute d clauses each.
  std::size_t expect_a = 0;
  const SubsetVarMap map(3);
  for (int x = 1; x <= 20; ++x) {
    for (int y = 1; y <= 20; ++y) {
      expect_a += static_cast<std::size_t>((map.subset(x) - map.subset(y)).size());
    }
  }
  EXPECT_EQ(expect_a, 600u);
  EXPECT_EQ(f.count('a'), expect_a);
  EXPECT_EQ(f.count('b'), 2u);
  EXPECT_EQ(f.count('c'), 36u);
  EXPECT_EQ(f.count('d'), 0u);
  for (std::size_t c = 0; c < f.num_clauses(); ++c) {
    if (f.family(c) == 'c') {
      EXPECT_EQ(f.clause(c).size(), 6u);
    }
  }
  CnfOptions sp;
  sp.sparse_paving = true;
  // Pairs of 3-subsets of [6] meeting in 2 elements: 20 * 9 / 2.
  EXPECT_EQ(build_non_sibo_cnf(3, sp).count('d'), 90u);
}

TEST(Cnf, OptionsOnlyShrinkClauses) {
  CnfOptions o;
  o.simplify_units = true;
  const CnfFormula s = build_non_sibo_cnf(3, o);
  const CnfFormula p = build_non_sibo_cnf(3);
  ASSERT_EQ(s.num_clauses(), p.num_clauses());
  for (std::size_t c = 0; c < s.num_clauses(); ++c) {
    if (s.family(c) == 'c') {
      EXPECT_EQ(s.clause(c).size(), 5u);
    }
  }
  o = {};
  o.normalize = true;
  const CnfFormula n = build_non_sibo_cnf(3, o);
  EXPECT_LE(n.num_clauses(), p.num_clauses());
  EXPECT_EQ(n.count('b'), 2u);
}

TEST(Cnf, RankRange) {
  EXPECT_THROW(build_non_sibo_cnf(0), std::invalid_argument);
  EXPECT_THROW(build_non_sibo_cnf(7), std::invalid_argument);
}

TEST(Dimacs, EmptyFormula) {
  EXPECT_EQ(emit_dimacs(CnfFormula()), "p cnf 0 0\n");
  CnfFormula f(2);
  f.add({1, -2}, 'x');
  EXPECT_EQ(emit_dimacs(f), "p cnf 2 1\n1 -2 0\n");
  EXPECT_THROW(f.add({3}, 'x'), std::out_of_range);
  EXPECT_THROW(f.add({}, 'x'), std::invalid_argument);
}

TEST(Dimacs, MatchesGoldenRankTwo) {
  EXPECT_EQ(emit_dimacs(build_non_sibo_cnf(2)),
            slurp(std::string(MATPROX_GOLDEN_DIR) + "/non_sibo_r2.cnf"));
}

TEST(Dimacs, MatchesIndependentGenerator) {
  const std::string script = std::string(MATPROX_GOLDEN_DIR) + "/make_golden.py";
  for (int r = 1; r <= 3; ++r) {
    for (bool sp : {false, true}) {
      CnfOptions o;
      o.sparse_paving = sp;
      const std::string cmd = std::string(MATPROX_PYTHON) + " " + script + " " +
                              std::to_string(r) + (sp ? " --sparse-paving" : "");
      EXPECT_EQ(emit_dimacs(build_non_sibo_cnf(r, o)), run_capture(cmd))
          << "r=" << r << " sparse=" << sp;
    }
  }
}

TEST(Models, AllTrueDecodesToUniform) {
  const SubsetVarMap map(3);
  const std::vector<bool> v(map.num_vars() + 1, true);
  const DecodedModel d = decode_model(map, v);
  EXPECT_EQ(d.family.size(), 20u);
  EXPECT_TRUE(find_isomorphism(d.matroid(), make_uniform(3, 6)));
  EXPECT_FALSE(verify_model(d));  // uniform pairs are SI-orderable
  EXPECT_FALSE(build_non_sibo_cnf(3).satisfied_by(v));
  EXPECT_THROW(decode_model(map, std::vector<bool>(5)), std::invalid_argument);
}

TEST(Models, NonMatroidFamilyFailsVerification) {
  const SubsetVarMap map(2);
  const DecodedModel d = decode_model(map, assignment_of(map, {ElementSet{0, 1}, ElementSet{2, 3}}));
  EXPECT_FALSE(verify_model(d));
}

TEST(Models, PlacedR10SatisfiesAndVerifies) {
  const Matroid r10 = make_r10();
  const auto [a, b] = canonical_r10_pair();
  // Send b to [5] and a to {5..9}.
  std::vector<int> perm(10);
  int lo = 0, hi = 5;
  for (int e = 0; e < 10; ++e) perm[e] = b.contains(e) ? lo++ : hi++;
  const Matroid placed = relabel(r10, Bijection{perm});
  const SubsetVarMap map(5);
  const auto v = assignment_of(map, placed.bases());
  EXPECT_TRUE(verify_model(decode_model(map, v)));
  EXPECT_TRUE(build_non_sibo_cnf(5).satisfied_by(v));
  CnfOptions sp;
  sp.sparse_paving = true;
  EXPECT_FALSE(build_non_sibo_cnf(5, sp).satisfied_by(v));
}

TEST(Models, R10Placements) {
  // 10! / 720 = 5040 relabelings; those keeping [5] and its complement as
  // bases number 5040 * 72 / 252.
  const auto placements = fixed_pair_placements(make_r10());
  EXPECT_EQ(placements.size(), 1440u);
  CnfFormula f = build_non_sibo_cnf(5);
  const SubsetVarMap map(5);
  for (std::size_t i = 0; i < placements.size(); i += 97) {
    std::vector<bool> v(map.num_vars() + 1, false);
    for (auto mask : placements[i]) v[map.var(ElementSet(mask))] = true;
    EXPECT_TRUE(f.satisfied_by(v));
  }
  const std::size_t before = f.num_clauses();
  EXPECT_EQ(block_isomorphs(f, make_r10()), 1440u);
  EXPECT_EQ(f.num_clauses(), before + 1440);
  EXPECT_EQ(f.count('x'), 1440u);
  EXPECT_THROW(fixed_pair_placements(make_uniform(2, 5)), std::invalid_argument);
}

TEST(Models, BlockExact) {
  CnfFormula f(2);
  f.add({1, 2}, 'a');
  block_exact_model(f, {false, true, false});
  EXPECT_FALSE(f.satisfied_by({false, true, false}));
  EXPECT_TRUE(f.satisfied_by({false, true, true}));
}

TEST(SolverOutput, Parsing) {
  CnfFormula f(2);
  f.add({1}, 'a');
  f.add({-2}, 'a');
  auto r = parse_solver_output("c hi\ns SATISFIABLE\nv 1 -2 0\n", f);
  EXPECT_EQ(r.status, SatStatus::kSat);
  ASSERT_TRUE(r.assignment.has_value());
  EXPECT_TRUE((*r.assignment)[1]);
  EXPECT_EQ(parse_solver_output("s SATISFIABLE\n", f).status, SatStatus::kUnknown);
  EXPECT_EQ(parse_solver_output("s SATISFIABLE\nv 1 -2\n", f).status, SatStatus::kUnknown);
  EXPECT_EQ(parse_solver_output("s SATISFIABLE\nv -1 -2 0\n", f).status, SatStatus::kUnknown);
  EXPECT_EQ(parse_solver_output("s SATISFIABLE\nv 1 -2 9 0\n", f).status, SatStatus::kUnknown);
  EXPECT_EQ(parse_solver_output("s UNSATISFIABLE\n", f).status, SatStatus::kUnsat);
  EXPECT_EQ(parse_solver_output("s UNKNOWN\n", f).status, SatStatus::kUnknown);
  EXPECT_EQ(parse_solver_output("", f).status, SatStatus::kUnknown);
  EXPECT_EQ(parse_solver_output("s SATISFIABLE\r\nv 1\r\nv -2 0\r\n", f).status, SatStatus::kSat);
}

TEST(Solver, TrivialFormulas) {
  CnfFormula sat(2);
  sat.add({1, 2}, 'a');
  sat.add({-1}, 'a');
  const auto r = run_solver(sat, MATPROX_TEST_SOLVER);
  ASSERT_EQ(r.status, SatStatus::kSat) << r.diagnostics;
  EXPECT_TRUE((*r.assignment)[2]);
  CnfFormula unsat(1);
  unsat.add({1}, 'a');
  unsat.add({-1}, 'a');
  EXPECT_EQ(run_solver(unsat, MATPROX_TEST_SOLVER).status, SatStatus::kUnsat);
}

TEST(Solver, FailuresAreUnknown) {
  CnfFormula f(1);
  f.add({1}, 'a');
  const auto slow = run_solver(f, "sleep 30 #", 0.3);
  EXPECT_EQ(slow.status, SatStatus::kUnknown);
  EXPECT_LT(slow.wall_seconds, 5.0);
  EXPECT_EQ(run_solver(f, "/nonexistent/solver").status, SatStatus::kUnknown);
  EXPECT_EQ(run_solver(f, "").status, SatStatus::kUnknown);
  EXPECT_EQ(run_solver(f, "echo s SATISFIABLE #").status, SatStatus::kUnknown);
}

TEST(Solver, EnvironmentDefault) {
  EXPECT_EQ(default_solver_command(), MATPROX_TEST_SOLVER);
}

TEST(Solver, SmallRanksAreUnsat) {
  CnfOptions sp;
  sp.sparse_paving = true;
  for (int r = 1; r <= 3; ++r) {
    EXPECT_EQ(run_solver(build_non_sibo_cnf(r), MATPROX_TEST_SOLVER).status, SatStatus::kUnsat);
    EXPECT_EQ(run_solver(build_non_sibo_cnf(r, sp), MATPROX_TEST_SOLVER).status,
              SatStatus::kUnsat);
  }
}

}  // namespace
}  // namespace matprox
