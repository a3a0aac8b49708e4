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

// Scripted end-to-end checks, shared by `matprox reproduce` and the
// acceptance test binary.

#ifndef MATPROX_TOOLS_CRITERIA_HPP
#define MATPROX_TOOLS_CRITERIA_HPP

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "matprox/matprox.hpp"

namespace matprox::criteria {

enum class Status { kPass, kFail, kUnknown };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

struct Result {
  Status status = Status::kFail;
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 20260101;
  std::string solver;          ///< SAT command; empty means $SAT_SOLVER
  double sat_time_limit = 0;   ///< per solver call, 0 = none
  std::string golden_dir;      ///< holds non_sibo_r2.cnf
  std::string cli_path;        ///< matprox binary, for CLI determinism
  int workers = 1;
};

struct Criterion {
  int number;
  const char* id;
  const char* title;
  std::function<Result(const Options&)> run;
};

namespace detail {

inline Result pass(std::string d) { return {Status::kPass, std::move(d), 0}; }
inline Result fail(std::string d) { return {Status::kFail, std::move(d), 0}; }

/// Cycle-structure oracle for R10 bases, independent of the library's
/// connectivity/bipartiteness test: enumerate every edge subset of the
/// 5-edge graph that is a cycle (connected, all degrees 2), then require
/// exactly one cycle and that it is odd.
inline bool r10_basis_by_cycles(ElementSet edges) {
  const std::vector<int> ids = edges.ids();
  int odd = 0, even = 0;
  for (int mask = 1; mask < (1 << ids.size()); ++mask) {
    std::array<int, 6> deg{};
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (mask >> i & 1) {
        const auto [u, v] = kK5Edges[ids[i]];
        ++deg[u];
        ++deg[v];
        es.emplace_back(u, v);
      }
    }
    bool two_regular = true;
    int start = -1;
    for (int v = 1; v <= 5; ++v) {
      if (deg[v] != 0 && deg[v] != 2) two_regular = false;
      if (deg[v] == 2 && start < 0) start = v;
    }
    if (!two_regular || start < 0) continue;
    // Connected?
    std::array<bool, 6> seen{};
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : es) {
        const int w = a == v ? b : (b == v ? a : -1);
        if (w > 0 && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    bool connected = true;
    for (int v = 1; v <= 5; ++v) {
      if (deg[v] == 2 && !seen[v]) connected = false;
    }
    if (!connected) continue;
    (es.size() % 2 ? odd : even) += 1;
  }
  return odd == 1 && even == 0;
}

inline std::string solver_of(const Options& o) {
  return o.solver.empty() ? default_solver_command() : o.solver;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string run_capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  pclose(p);
  return out;
}

/// A random group: Z_m (2 <= m <= 8), Z, or a product of two of those.
inline AbelianGroup random_group(Rng& rng) {
  auto one = [&] {
    const auto m = rng.between(1, 8);
    return m == 1 ? AbelianGroup::integers() : AbelianGroup::cyclic(m);
  };
  if (rng.chance(1, 4)) return AbelianGroup::product({one(), one()});
  return one();
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline Result r10_basis_count(const Options&) {
  const Matroid r10 = make_r10();
  if (!validate_basis_axiom(r10).holds) return detail::fail("exchange axiom fails");
  std::size_t oracle = 0;
  bool agree = true;
  for_each_subset(10, 5, [&](ElementSet s) {
    const bool o = detail::r10_basis_by_cycles(s);
    oracle += o ? 1 : 0;
    agree &= o == r10.is_basis(s);
  });
  const std::string d = "bases=" + std::to_string(r10.basis_count()) +
                        " oracle=" + std::to_string(oracle) +
                        " subsets=252 axiom=ok";
  if (!agree || oracle != r10.basis_count() || oracle != 162) return detail::fail(d);
  return detail::pass(d);
}

inline Result r10_not_sibo(const Options&) {
  const Matroid r10 = make_r10();
  const auto [a, b] = canonical_r10_pair();
  const bool fast = find_si_ordering(r10, a, b).has_value();
  const bool brute = find_si_ordering_brute_force(r10, a, b).has_value();
  const bool fast_rev = find_si_ordering(r10, b, a).has_value();
  const std::string d = std::string("search=") + (fast ? "found" : "absent") +
                        " brute-force(14400 pairs)=" + (brute ? "found" : "absent") +
                        " reversed-pair=" + (fast_rev ? "found" : "absent");
  return !fast && !brute && !fast_rev ? detail::pass(d) : detail::fail(d);
}

inline Result r10_window_table(const Options&) {
  const Matroid r10 = make_r10();
  bool ok = true;
  std::string d;
  for (int k = 1; k <= 5; ++k) {
    const auto f = si_window_table(r10, r10_near_si_orderings(k)).failing();
    ok &= f.size() == 1 && f[0] == Window{3, 3};
  }
  d = "near-SI orderings: only (3,3) fails for k=1..5 (0-based (2,3))";
  const auto transposed = si_window_table(r10, r10_near_si_orderings_transposed(1)).failing();
  d += "; with a3,a4 transposed the table fails at";
  for (Window w : transposed) d += " " + to_string(w);
  return ok ? detail::pass(d) : detail::fail("window table mismatch; " + d);
}

inline Result r10_pair_transitivity(const Options&) {
  const auto rep = verify_r10_pair_transitivity();
  const std::string d = "disjoint ordered pairs=" + std::to_string(rep.pairs) +
                        " mapped=" + std::to_string(rep.mapped);
  return rep.holds() ? detail::pass(d) : detail::fail(d);
}

inline Result non_sibo_sat(const Options& o) {
  const std::string cmd = detail::solver_of(o);
  std::string d;
  for (int r = 1; r <= 4; ++r) {
    const auto res = run_solver(build_non_sibo_cnf(r), cmd, o.sat_time_limit);
    d += "r=" + std::to_string(r) + ":" + to_string(res.status) + " ";
    if (res.status == SatStatus::kUnknown) {
      return {Status::kUnknown, d + res.diagnostics, 0};
    }
    if (res.status != SatStatus::kUnsat) return detail::fail(d);
  }
  CnfFormula f5 = build_non_sibo_cnf(5);
  const SubsetVarMap map(5);
  const Matroid r10 = make_r10();
  const int models_wanted = 2;
  int models = 0;
  for (; models < models_wanted; ++models) {
    const auto res = run_solver(f5, cmd, o.sat_time_limit);
    if (res.status == SatStatus::kUnknown) {
      return {Status::kUnknown,
              d + "r=5:UNKNOWN after " + std::to_string(models) + " models (" +
                  res.diagnostics + ")",
              0};
    }
    if (res.status == SatStatus::kUnsat) {
      if (models == 0) return detail::fail(d + "r=5:UNSATISFIABLE");
      break;
    }
    const DecodedModel dm = decode_model(map, *res.assignment);
    if (!verify_model(dm)) return detail::fail(d + "r=5 model fails verification");
    if (!find_isomorphism(dm.matroid(), r10)) {
      return detail::fail(d + "r=5 model not isomorphic to R10");
    }
    block_exact_model(f5, *res.assignment);
  }
  d += "r=5:SATISFIABLE, " + std::to_string(models) +
       " enumerated models verified and isomorphic to R10";
  return detail::pass(d);
}

inline Result sparse_paving_sat(const Options& o) {
  const std::string cmd = detail::solver_of(o);
  std::string d;
  CnfOptions opts;
  opts.sparse_paving = true;
  for (int r = 1; r <= 5; ++r) {
    const auto res = run_solver(build_non_sibo_cnf(r, opts), cmd, o.sat_time_limit);
    d += "r=" + std::to_string(r) + ":" + to_string(res.status) + " ";
    if (res.status == SatStatus::kUnknown) {
      return {Status::kUnknown, d + res.diagnostics, 0};
    }
    if (res.status != SatStatus::kUnsat) return detail::fail(d);
  }
  return detail::pass(d);
}

inline Result proximity_sparse_paving(const Options& o) {
  Rng rng(o.seed);
  const int trials = 10000;
  int nontrivial = 0;
  int max_radius = 0;
  for (int t = 0; t < trials; ++t) {
    const int n = static_cast<int>(rng.between(2, 10));
    const int r = static_cast<int>(rng.between(1, n - 1));
    const Matroid m = random_sparse_paving(rng, n, r, rng.between(1, 3), 4);
    const AbelianGroup g = AbelianGroup::cyclic(rng.between(2, 6));
    const LabeledInstance inst(m, random_labeling(rng, g, n),
                               random_forbidden(rng, g, static_cast<int>(rng.between(1, 3))));
    const auto v = check_proximity_bound(inst, o.workers);
    if (!v.pass) {
      return detail::fail("trial " + std::to_string(t) + ": " + v.to_string());
    }
    if (!v.vacuous && v.max_radius > 0) ++nontrivial;
    max_radius = std::max(max_radius, v.max_radius);
  }
  return detail::pass(std::to_string(trials) + " instances, 0 failures, " +
                      std::to_string(nontrivial) + " with positive radius, max radius " +
                      std::to_string(max_radius) + ", seed " + std::to_string(o.seed));
}

inline Result pigeonhole(const Options& o) {
  Rng rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
  const int trials = 100000;
  int via_repeat = 0;
  for (int t = 0; t < trials; ++t) {
    const int r = static_cast<int>(rng.between(2, 8));
    AbelianGroup g = detail::random_group(rng);
    if (g.is_finite() && g.order() < static_cast<std::uint64_t>(r)) g = AbelianGroup::integers();
    std::vector<int> ids(2 * r);
    for (int i = 0; i < 2 * r; ++i) ids[i] = i;
    rng.shuffle(ids);
    OrderingPair pair{{ids.begin(), ids.begin() + r}, {ids.begin() + r, ids.end()}};
    const Labeling psi = random_labeling(rng, g, 2 * r, 3);
    const GroupElement sb = group_sum(psi, pair.b_set());
    const GroupElement sa = group_sum(psi, pair.a_set());
    if (sa == sb) {
      --t;
      continue;
    }
    // F: psi(A), then prefix sums and random elements, never psi(B).
    std::vector<GroupElement> f{sa};
    GroupElement pre = sb;
    std::vector<GroupElement> prefixes;
    for (int k = 0; k < r - 1; ++k) {
      pre = g.add(pre, g.subtract(psi[pair.a[k]], psi[pair.b[k]]));
      prefixes.push_back(pre);
    }
    int guard = 0;
    while (static_cast<int>(f.size()) < r - 1 && guard++ < 1000) {
      GroupElement x = (!prefixes.empty() && rng.chance(3, 4))
                           ? prefixes[rng.below(prefixes.size())]
                           : random_element(rng, g, 3 * r);
      if (x == sb || std::find(f.begin(), f.end(), x) != f.end()) continue;
      f.push_back(x);
    }
    if (static_cast<int>(f.size()) != r - 1) {
      --t;
      continue;
    }
    const ForbiddenSet fs(g, f);
    Window w;
    try {
      w = pigeonhole_window(pair, psi, fs);
    } catch (const std::exception& e) {
      return detail::fail("trial " + std::to_string(t) + ": threw " + e.what());
    }
    const bool ok = w.i >= 1 && w.i <= w.j && w.j <= r && !(w.i == 1 && w.j == r) &&
                    !fs.contains(group_sum(psi, window_set(pair, w)));
    if (!ok) return detail::fail("trial " + std::to_string(t) + ": bad window " + to_string(w));
    if (w.i > 1) ++via_repeat;
  }
  return detail::pass(std::to_string(trials) + " inputs (2<=r<=8, psi(A) in F), 0 failures, " +
                      std::to_string(via_repeat) + " resolved by a repeated prefix sum");
}

inline Result coloring(const Options& o) {
  Rng rng(o.seed ^ 0x51ed270b27a2d5e1ULL);
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    const int r = static_cast<int>(rng.between(1, 8));
    const int p = static_cast<int>(rng.between(1, r));
    const int q = static_cast<int>(rng.between(1, std::min(r, r + 1 - p)));
    // Palette of p + q colors; A uses p of them, B uses q, surjectively.
    std::vector<int> palette(p + q);
    for (int i = 0; i < p + q; ++i) palette[i] = i;
    rng.shuffle(palette);
    std::vector<int> ca(palette.begin(), palette.begin() + p);
    std::vector<int> cb;
    std::vector<int> pool = palette;
    rng.shuffle(pool);
    cb.assign(pool.begin(), pool.begin() + q);
    auto assign = [&](const std::vector<int>& colors) {
      std::vector<int> c(r);
      for (int i = 0; i < r; ++i) {
        c[i] = i < static_cast<int>(colors.size()) ? colors[i] : colors[rng.below(colors.size())];
      }
      rng.shuffle(c);
      return c;
    };
    const std::vector<int> col_a = assign(ca);
    const std::vector<int> col_b = assign(cb);
    std::vector<int> ids(2 * r);
    for (int i = 0; i < 2 * r; ++i) ids[i] = i;
    rng.shuffle(ids);
    ElementSet a, b;
    std::vector<ElementSet> blocks(p + q);
    for (int i = 0; i < r; ++i) {
      a = a.with(ids[i]);
      b = b.with(ids[r + i]);
      blocks[col_a[i]] = blocks[col_a[i]].with(ids[i]);
      blocks[col_b[i]] = blocks[col_b[i]].with(ids[r + i]);
    }
    std::erase_if(blocks, [](ElementSet s) { return s.empty(); });
    const Partition c(2 * r, blocks);
    OrderingPair ord;
    try {
      ord = coloring_ordering(a, b, c);
    } catch (const std::exception& e) {
      return detail::fail("trial " + std::to_string(t) + ": threw " + e.what());
    }
    if (ord.a_set() != a || ord.b_set() != b || !check_no_window_is_union(ord, c)) {
      return detail::fail("trial " + std::to_string(t) + ": a window is a union of classes");
    }
  }
  return detail::pass(std::to_string(trials) + " colorings (r<=8, |c(A)|+|c(B)|<=r+1), 0 failures");
}

/// One member of the 2^k - 1 family: unique valid basis, basis count, and
/// closest-basis distance.
inline Result lower_bound_single(int k) {
  static constexpr std::size_t kExpectBases[] = {0, 2, 20, 3432};
  const auto [inst, a] = lower_bound_instance(k);
  const ElementSet b = inst.matroid.ground() - a;
  const bool unique = verify_unique_valid_basis(inst, b);
  const auto c = closest_valid_basis(inst, a);
  const bool good = unique && inst.matroid.basis_count() == kExpectBases[k] && c &&
                    c->distance == (1 << k) - 1;
  const std::string d = "k=" + std::to_string(k) +
                        ": bases=" + std::to_string(inst.matroid.basis_count()) +
                        " unique=" + (unique ? "yes" : "no") +
                        " distance=" + (c ? std::to_string(c->distance) : "-") +
                        " expected=" + std::to_string((1 << k) - 1);
  return good ? detail::pass(d) : detail::fail(d);
}

inline Result lower_bound_family(const Options&) {
  std::string d;
  bool ok = true;
  for (int k = 1; k <= 3; ++k) {
    const Result r = lower_bound_single(k);
    ok &= r.status == Status::kPass;
    d += (k > 1 ? "; " : "") + r.detail;
  }
  return ok ? detail::pass(d) : detail::fail(d);
}

inline Result window_bounds(const Options& o) {
  if (window_bound(1) != 2 || window_bound(2) != 4 || window_bound(3) != 13) {
    return detail::fail("window_bound mismatch");
  }
  Rng rng(o.seed ^ 0x2545f4914f6cdd1dULL);
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    const int k = static_cast<int>(rng.between(0, 2));
    const int l = static_cast<int>(window_bound(k));
    // Blocks of size 1..2 on a ground set large enough for them.
    std::vector<int> xs(l), ys(l);
    int total_x = 0, total_y = 0;
    for (int i = 0; i < l; ++i) {
      xs[i] = static_cast<int>(rng.between(1, 2));
      ys[i] = static_cast<int>(rng.between(1, 2));
      total_x += xs[i];
      total_y += ys[i];
    }
    const int extra = static_cast<int>(rng.between(0, 2));
    const int n = total_x + total_y + extra;
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    rng.shuffle(ids);
    BlockSequence blocks;
    int pos = 0;
    for (int i = 0; i < l; ++i) {
      ElementSet x;
      for (int s = 0; s < xs[i]; ++s) x = x.with(ids[pos++]);
      blocks.x.push_back(x);
      blocks.base = blocks.base | x;
    }
    for (int i = 0; i < l; ++i) {
      ElementSet y;
      for (int s = 0; s < ys[i]; ++s) y = y.with(ids[pos++]);
      blocks.y.push_back(y);
    }
    for (int i = 0; i < extra; ++i) blocks.base = blocks.base.with(ids[pos++]);
    std::vector<Constraint> cs;
    bool redo = false;
    for (int c = 0; c < k; ++c) {
      const AbelianGroup g = detail::random_group(rng);
      const Labeling psi = random_labeling(rng, g, n, 3);
      const GroupElement base = group_sum(psi, blocks.base);
      // Target: usually the value of some window, never psi(B).
      GroupElement f = rng.chance(3, 4)
                           ? group_sum(psi, blocks.window(1, static_cast<int>(rng.between(1, l))))
                           : random_element(rng, g, 6);
      if (f == base) {
        redo = true;
        break;
      }
      cs.push_back({psi, f});
    }
    if (redo) {
      --t;
      continue;
    }
    const auto w = find_window_multi(blocks, cs);
    if (!w) return detail::fail("trial " + std::to_string(t) + ": no window at l=window_bound(k)");
    if (!satisfies_all(cs, blocks.window(w->i, w->j))) {
      return detail::fail("trial " + std::to_string(t) + ": returned window violates a constraint");
    }
  }
  return detail::pass("window_bound(1..3)=2,4,13; " + std::to_string(trials) +
                      " randomized block sequences (k<=2, l=window_bound(k)), 0 failures");
}

inline Result uniform_minor(const Options& o) {
  Rng rng(o.seed ^ 0x6a09e667f3bcc909ULL);
  const int matroids = 100;
  int checked = 0;
  for (int t = 0; t < matroids; ++t) {
    const Matroid m = random_sparse_paving(rng, 12, 6, rng.between(1, 3), 4);
    for (int s = 0; s < 3; ++s) {
      const ElementSet b = m.bases()[rng.below(m.basis_count())];
      UniformMinor u;
      try {
        u = extract_uniform_minor(m, b, 2);
      } catch (const std::exception& e) {
        return detail::fail("matroid " + std::to_string(t) + ": " + e.what());
      }
      const MinorResult mr = minor(m, u.x, u.y);
      if (!is_uniform_b_minor(m, b, u, 2) || !find_isomorphism(mr.matroid, make_uniform(2, 4))) {
        return detail::fail("matroid " + std::to_string(t) + ": minor is not U_{2,4}");
      }
      ++checked;
    }
  }
  return detail::pass(std::to_string(matroids) + " sparse paving matroids (n=12, r=6), " +
                      std::to_string(checked) + " sampled bases, every minor verified U_{2,4}");
}

inline Result determinism(const Options& o) {
  std::string d;
  const std::string r2a = emit_dimacs(build_non_sibo_cnf(2));
  const std::string r2b = emit_dimacs(build_non_sibo_cnf(2));
  const std::string r3a = emit_dimacs(build_non_sibo_cnf(3));
  const std::string r3b = emit_dimacs(build_non_sibo_cnf(3));
  if (r2a != r2b || r3a != r3b) return detail::fail("DIMACS differs between runs");
  d += "DIMACS r=2,3 identical across runs";
  if (!o.golden_dir.empty()) {
    const std::string golden = detail::read_file(o.golden_dir + "/non_sibo_r2.cnf");
    if (golden != r2a) return detail::fail(d + "; r=2 differs from golden file");
    d += "; r=2 matches golden file";
  }
  if (!o.cli_path.empty()) {
    const std::vector<std::string> cmds = {
        " gen --type sparse-paving --n 9 --r 4 --seed 11 --labels Zm:5 --forbid-size 2",
        " gen --type graph --n 6 --extra 4 --seed 3",
        " sat emit --rank 3 --sparse-paving",
        " sibo table",
    };
    for (const auto& c : cmds) {
      const std::string a = detail::run_capture(o.cli_path + c + " 2>/dev/null");
      const std::string b = detail::run_capture(o.cli_path + c + " 2>/dev/null");
      if (a.empty() || a != b) return detail::fail(d + "; CLI output differs for:" + c);
    }
    // Same instance checked with 1 and 4 workers.
    const std::string inst = detail::run_capture(o.cli_path + cmds[0] + " 2>/dev/null");
    char tmpl[] = "/tmp/matprox-det-XXXXXX";
    const int fd = mkstemp(tmpl);
    if (fd >= 0) {
      close(fd);
      std::ofstream(tmpl) << inst;
      const std::string w1 = detail::run_capture(o.cli_path + " check-proximity " + tmpl +
                                                 " --workers 1 2>/dev/null");
      const std::string w4 = detail::run_capture(o.cli_path + " check-proximity " + tmpl +
                                                 " --workers 4 2>/dev/null");
      std::remove(tmpl);
      if (w1.empty() || w1 != w4) return detail::fail(d + "; check-proximity depends on workers");
    }
    d += "; CLI outputs identical across runs and worker counts";
  }
  return detail::pass(d);
}

inline const std::vector<Criterion>& all() {
  static const std::vector<Criterion> list = {
      {1, "r10-basis-count", "R10 construction and basis count", r10_basis_count},
      {2, "r10-not-sibo", "canonical R10 pair has no SI-ordering", r10_not_sibo},
      {3, "r10-window-table", "R10 near-SI orderings fail only at (3,3)", r10_window_table},
      {4, "r10-pair-transitivity", "automorphisms act transitively on disjoint R10 pairs",
       r10_pair_transitivity},
      {5, "non-sibo-sat", "non-SIBO CNF: UNSAT r<=4, SAT r=5 with R10 models", non_sibo_sat},
      {6, "sparse-paving-sat", "sparse paving non-SIBO CNF UNSAT r<=5", sparse_paving_sat},
      {7, "proximity-sparse-paving", "proximity bound on random sparse paving instances",
       proximity_sparse_paving},
      {8, "pigeonhole-window", "pigeonhole window property suite", pigeonhole},
      {9, "coloring-ordering", "color-class ordering property suite", coloring},
      {10, "lower-bound-family", "2^k-1 lower-bound family, k=1..3", lower_bound_family},
      {11, "window-bounds", "window bounds and multi-label window search", window_bounds},
      {12, "uniform-minor", "U_{2,4} B-minors of sparse paving matroids", uniform_minor},
      {13, "determinism", "byte-identical DIMACS and CLI outputs", determinism},
  };
  return list;
}

inline Result run_timed(const Criterion& c, const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r = c.run(o);
  } catch (const std::exception& e) {
    r = {Status::kFail, std::string("exception: ") + e.what(), 0};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace matprox::criteria

#endif  // MATPROX_TOOLS_CRITERIA_HPP
