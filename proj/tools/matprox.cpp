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

// matprox command-line tool.
//
// Exit codes: 0 pass/success, 1 fail or counterexample (witness on stdout),
// 2 usage, IO or parse error, 3 unknown (solver timeout and the like).
// Timing goes to stderr so stdout is reproducible.

#include <unistd.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "criteria.hpp"
#include "matprox/matprox.hpp"

#ifndef MATPROX_GOLDEN_DIR
#define MATPROX_GOLDEN_DIR ""
#endif

namespace {

using namespace matprox;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;
constexpr std::uint64_t kDefaultSeed = 20260101;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
  std::string solver;
  double time_limit = 0;
  std::string out;
};

class Timer {
 public:
  explicit Timer(std::string what) : what_(std::move(what)) {}
  ~Timer() {
    const double s = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start_)
                         .count();
    std::cerr << what_ << ": " << s << " s\n";
  }

 private:
  std::string what_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
}

ElementSet ids_to_set(const std::string& text) {
  std::string s = text;
  for (char& c : s) {
    if (c == ',') c = ' ';
  }
  const auto ids = parse_id_list(s);
  return ElementSet::from_ids(ids);
}

std::string ordering_line(const std::vector<int>& v) {
  std::string out;
  for (int e : v) out += (out.empty() ? "" : " ") + std::to_string(e);
  return out;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string type;
  int n = 0;
  int r = 0;
  int extra = 0;
  int k = 1;
  std::int64_t p = 2;
  std::uint64_t density_num = 1;
  std::uint64_t density_den = 2;
  std::string labels;
  int forbid_size = 0;
};

int run_gen(const GenArgs& g, const Config& cfg) {
  Rng rng(cfg.seed);
  std::string text = "# matprox gen type=" + g.type + " seed=" + std::to_string(cfg.seed) + "\n";
  int n = 0;
  if (g.type == "r10") {
    const Matroid m = make_r10();
    n = m.size();
    text += write_matroid(m);
  } else if (g.type == "uniform") {
    if (g.r < 0 || g.r > g.n) throw UsageError("uniform needs 0 <= r <= n");
    n = g.n;
    text += write_matroid(make_uniform(g.r, g.n));
  } else if (g.type == "sparse-paving") {
    if (g.r < 1 || g.r >= g.n) throw UsageError("sparse-paving needs 1 <= r < n");
    const auto rep = random_sparse_paving_rep(rng, g.n, g.r, g.density_num, g.density_den);
    n = g.n;
    text += write_sparse_paving(rep);
  } else if (g.type == "graph") {
    if (g.n < 1) throw UsageError("graph needs --n vertices");
    const Graph gr = random_connected_graph(rng, g.n, g.extra);
    n = static_cast<int>(gr.edges.size());
    text += write_graph(gr);
  } else if (g.type == "linear") {
    if (g.r < 1 || g.n < 1) throw UsageError("linear needs --r rows and --n columns");
    const Matroid m = random_linear(rng, g.r, g.n, g.p);
    n = m.size();
    text += write_matroid(m);
  } else if (g.type == "lower-bound") {
    const auto [inst, a] = lower_bound_instance(g.k);
    text += "# start basis A = " + to_id_list(a) + "\n";
    text += write_multi_label(inst);
    emit(cfg, text);
    return kExitPass;
  } else {
    throw UsageError("unknown --type " + g.type);
  }
  if (!g.labels.empty()) {
    const AbelianGroup grp = AbelianGroup::parse(g.labels);
    text += write_labels(random_labeling(rng, grp, n));
    if (g.forbid_size > 0) text += write_forbidden(random_forbidden(rng, grp, g.forbid_size));
  }
  emit(cfg, text);
  return kExitPass;
}

int run_check_proximity(const std::vector<std::string>& files, const Config& cfg) {
  Timer t("check-proximity");
  const LabeledInstance inst = load_instances(files).labeled_instance();
  const ProximityVerdict v = check_proximity_bound(inst, cfg.workers);
  std::cout << v.to_string() << "\n";
  return v.pass ? kExitPass : kExitFail;
}

int run_sibo_check(const std::string& file, const Config& cfg) {
  Timer t("sibo check");
  const Matroid m = load_instance(file).build_matroid();
  const SiboVerdict v = is_sibo(m, cfg.workers);
  std::cout << v.to_string() << "\n";
  return v.pass ? kExitPass : kExitFail;
}

int run_sibo_pair(const std::string& file, const std::string& a, const std::string& b) {
  const Matroid m = load_instance(file).build_matroid();
  const auto ord = find_si_ordering(m, ids_to_set(a), ids_to_set(b));
  if (!ord) {
    std::cout << "NONE\n";
    return kExitFail;
  }
  std::cout << "a: " << ordering_line(ord->a) << "\nb: " << ordering_line(ord->b) << "\n";
  return kExitPass;
}

void print_table(const SiWindowTable& t, int r) {
  // Row i holds windows (i,i)..(i,r), right-aligned under column j.
  const std::string rows = t.to_rows();
  std::istringstream in(rows);
  std::string line;
  int i = 1;
  while (std::getline(in, line)) {
    std::string out(2 * (i - 1), ' ');
    for (char c : line) out += std::string(1, c) + " ";
    out.pop_back();
    std::cout << out << "\n";
    ++i;
  }
  (void)r;
}

int run_sibo_table(int k, bool transposed) {
  const Matroid r10 = make_r10();
  const OrderingPair pair =
      transposed ? r10_near_si_orderings_transposed(k) : r10_near_si_orderings(k);
  const SiWindowTable t = si_window_table(r10, pair);
  std::cout << "a: " << ordering_line(pair.a) << "\nb: " << ordering_line(pair.b) << "\n";
  print_table(t, pair.length());
  std::string failing;
  for (Window w : t.failing()) failing += " " + to_string(w);
  std::cout << "failing:" << (failing.empty() ? " none" : failing) << "\n";
  return kExitPass;
}

struct SatArgs {
  int rank = 0;
  bool sparse_paving = false;
  bool normalize = false;
  bool simplify_units = false;
  std::string model;
};

CnfFormula sat_formula(const SatArgs& s) {
  if (s.rank < 1 || s.rank > 6) throw UsageError("--rank must be in 1..6");
  CnfOptions o;
  o.sparse_paving = s.sparse_paving;
  o.normalize = s.normalize;
  o.simplify_units = s.simplify_units;
  return build_non_sibo_cnf(s.rank, o);
}

void print_model(const DecodedModel& d) {
  const Matroid m = d.matroid();
  std::cout << "A = " << to_id_list(d.high()) << "\nB = " << to_id_list(d.low()) << "\n"
            << write_matroid(m);
}

int run_sat_emit(const SatArgs& s, const Config& cfg) {
  emit(cfg, emit_dimacs(sat_formula(s)));
  return kExitPass;
}

int run_sat_solve(const SatArgs& s, const Config& cfg) {
  const std::string cmd = cfg.solver.empty() ? default_solver_command() : cfg.solver;
  if (cmd.empty()) throw UsageError("no solver: pass --solver or set SAT_SOLVER");
  const CnfFormula f = sat_formula(s);
  const SolverResult res = run_solver(f, cmd, cfg.time_limit);
  std::cerr << "sat solve rank " << s.rank << ": " << res.wall_seconds << " s\n";
  std::cout << "s " << to_string(res.status) << "\n";
  switch (res.status) {
    case SatStatus::kUnsat:
      return kExitPass;
    case SatStatus::kUnknown:
      std::cerr << res.diagnostics << "\n";
      return kExitUnknown;
    case SatStatus::kSat: {
      const DecodedModel d = decode_model(SubsetVarMap(s.rank), *res.assignment);
      std::cout << "verified " << (verify_model(d) ? "yes" : "no") << "\n";
      print_model(d);
      return kExitFail;
    }
  }
  return kExitUnknown;
}

/// Reads `v` lines (or bare literals) into an assignment. The rank is the
/// one whose variable count matches the largest literal, unless given.
int run_sat_verify(const SatArgs& s) {
  std::ifstream in(s.model);
  if (!in) throw std::runtime_error("cannot open " + s.model);
  std::vector<long long> lits;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c' || line[0] == 's') continue;
    std::istringstream ls(line[0] == 'v' ? line.substr(1) : line);
    std::string tok;
    while (ls >> tok) {
      long long v = 0;
      const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size()) {
        throw ParseError(line_no, "bad literal '" + tok + "'");
      }
      if (v != 0) lits.push_back(v);
    }
  }
  long long max_var = 0;
  for (long long l : lits) max_var = std::max(max_var, l < 0 ? -l : l);
  int rank = s.rank;
  if (rank == 0) {
    for (int r = 1; r <= 6; ++r) {
      if (SubsetVarMap(r).num_vars() == max_var) rank = r;
    }
    if (rank == 0) throw UsageError("cannot infer rank from the model; pass --rank");
  }
  const SubsetVarMap map(rank);
  if (max_var > map.num_vars()) throw UsageError("model has more variables than the rank allows");
  std::vector<bool> value(map.num_vars() + 1, false);
  for (long long l : lits) value[static_cast<std::size_t>(l < 0 ? -l : l)] = l > 0;
  const DecodedModel d = decode_model(map, value);
  const bool ok = verify_model(d);
  std::cout << (ok ? "PASS" : "FAIL") << " rank=" << rank << "\n";
  print_model(d);
  return ok ? kExitPass : kExitFail;
}

int run_multilabel_lower_bound(int k, const Config& cfg) {
  const auto [inst, a] = lower_bound_instance(k);
  emit(cfg, "# start basis A = " + to_id_list(a) + "\n" + write_multi_label(inst));
  return kExitPass;
}

int run_multilabel_closest(const std::vector<std::string>& files, const std::string& a) {
  Timer t("multilabel closest");
  const MultiLabelInstance inst = load_instances(files).multi_label_instance();
  const ElementSet start = ids_to_set(a);
  const auto c = closest_valid_basis(inst, start);
  if (!c) {
    std::cout << "NONE\n";
  } else {
    std::cout << "basis " << to_string(c->basis) << " distance " << c->distance << "\n";
  }
  const auto rep = check_exponential_proximity(inst, start);
  std::cout << rep.to_string() << "\n";
  return rep.verdict == ExponentialVerdict::kViolated ? kExitFail : kExitPass;
}

int run_minor_extract(const std::string& file, int k, const std::string& basis) {
  const Matroid m = load_instance(file).build_matroid();
  const ElementSet b = ids_to_set(basis);
  const UniformMinor u = extract_uniform_minor(m, b, k);
  const MinorResult mr = minor(m, u.x, u.y);
  const bool ok = is_uniform_b_minor(m, b, u, k);
  std::cout << "X = " << to_string(u.x) << "\nY = " << to_string(u.y) << "\n"
            << "verified " << (ok ? "yes" : "no") << "\n"
            << write_matroid(mr.matroid);
  return ok ? kExitPass : kExitFail;
}

int run_reproduce(const std::string& id, const Config& cfg) {
  criteria::Options o;
  o.seed = cfg.seed;
  o.solver = cfg.solver;
  o.sat_time_limit = cfg.time_limit;
  o.golden_dir = MATPROX_GOLDEN_DIR;
  o.workers = cfg.workers;
  char self[4096];
  const ssize_t len = readlink("/proc/self/exe", self, sizeof self - 1);
  if (len > 0) o.cli_path = std::string(self, static_cast<std::size_t>(len));

  std::vector<std::pair<std::string, std::function<criteria::Result()>>> jobs;
  for (const auto& c : criteria::all()) {
    if (id == c.id || id == "all") {
      jobs.emplace_back(c.id, [&c, &o] { return criteria::run_timed(c, o); });
    }
  }
  for (int k = 1; k <= 3; ++k) {
    if (id == "lower-bound-k" + std::to_string(k)) {
      jobs.emplace_back(id, [k] { return criteria::lower_bound_single(k); });
    }
  }
  if (jobs.empty()) throw UsageError("unknown criterion id '" + id + "'");
  if (id == "r10-window-table") run_sibo_table(1, false);

  std::cout << "seed " << cfg.seed << "\n";
  int code = kExitPass;
  for (const auto& [name, job] : jobs) {
    const auto start = std::chrono::steady_clock::now();
    const criteria::Result r = job();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << criteria::status_name(r.status) << " " << name << ": " << r.detail << "\n";
    std::cerr << name << ": " << s << " s\n";
    if (r.status == criteria::Status::kFail) code = kExitFail;
    if (r.status == criteria::Status::kUnknown && code == kExitPass) code = kExitUnknown;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group-labeled matroid basis toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Config cfg;

  auto common = [&cfg](CLI::App* sub, bool seed, bool workers, bool solver, bool out) {
    if (seed) sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    if (workers) {
      sub->add_option("--workers", cfg.workers, "worker threads")
          ->check(CLI::Range(1, 256))
          ->capture_default_str();
    }
    if (solver) {
      sub->add_option("--solver", cfg.solver, "SAT solver command (default $SAT_SOLVER)");
      sub->add_option("--time-limit", cfg.time_limit, "seconds per solver call")
          ->check(CLI::PositiveNumber);
    }
    if (out) sub->add_option("--out", cfg.out, "output file (default stdout)");
  };

  std::function<int()> action;

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  gen_cmd->add_option("--type", gen.type, "r10|uniform|sparse-paving|graph|linear|lower-bound")
      ->required()
      ->check(CLI::IsMember({"r10", "uniform", "sparse-paving", "graph", "linear", "lower-bound"}));
  gen_cmd->add_option("--n", gen.n, "ground set size (graph: vertices; linear: columns)");
  gen_cmd->add_option("--r", gen.r, "rank (linear: rows)");
  gen_cmd->add_option("--extra", gen.extra, "graph: edges beyond a spanning tree");
  gen_cmd->add_option("--p", gen.p, "linear: field size (prime)");
  gen_cmd->add_option("--k", gen.k, "lower-bound: number of labelings")->check(CLI::Range(1, 3));
  gen_cmd->add_option("--density", gen.density_num, "sparse-paving: keep chance numerator");
  gen_cmd->add_option("--density-den", gen.density_den, "sparse-paving: keep chance denominator")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--labels", gen.labels, "add random labels in this group (e.g. Zm:5, Z)");
  gen_cmd->add_option("--forbid-size", gen.forbid_size, "add a random forbidden set");
  common(gen_cmd, true, false, false, true);
  gen_cmd->callback([&] { action = [&] { return run_gen(gen, cfg); }; });

  std::vector<std::string> files;
  auto* prox = app.add_subcommand("check-proximity", "check the |F| proximity bound");
  prox->add_option("files", files, "instance files (matroid + labels + forbid)")->required();
  common(prox, false, true, false, false);
  prox->callback([&] { action = [&] { return run_check_proximity(files, cfg); }; });

  auto* sibo = app.add_subcommand("sibo", "SI-orderings");
  sibo->require_subcommand(1);
  std::string sibo_file, a_ids, b_ids;
  int table_k = 1;
  bool transposed = false;
  auto* sibo_check = sibo->add_subcommand("check", "is every basis pair SI-orderable?");
  sibo_check->add_option("file", sibo_file)->required();
  common(sibo_check, false, true, false, false);
  sibo_check->callback([&] { action = [&] { return run_sibo_check(sibo_file, cfg); }; });
  auto* sibo_pair = sibo->add_subcommand("pair", "find an SI-ordering of one pair");
  sibo_pair->add_option("file", sibo_file)->required();
  sibo_pair->add_option("--a", a_ids, "basis A ids")->required();
  sibo_pair->add_option("--b", b_ids, "basis B ids")->required();
  sibo_pair->callback([&] { action = [&] { return run_sibo_pair(sibo_file, a_ids, b_ids); }; });
  auto* sibo_table = sibo->add_subcommand("table", "R10 near-SI window table");
  sibo_table->add_option("--k", table_k, "rotation 1..5")->check(CLI::Range(1, 5));
  sibo_table->add_flag("--transposed", transposed, "exchange a3 and a4 in the orderings");
  sibo_table->callback([&] { action = [&] { return run_sibo_table(table_k, transposed); }; });

  auto* sat = app.add_subcommand("sat", "non-SIBO CNF encoding");
  sat->require_subcommand(1);
  SatArgs sa;
  auto formula_opts = [&sa](CLI::App* sub) {
    sub->add_option("--rank", sa.rank, "rank r (1..6)")->required();
    sub->add_flag("--sparse-paving", sa.sparse_paving, "add the sparse paving clauses");
    sub->add_flag("--normalize", sa.normalize, "sort and deduplicate clauses");
    sub->add_flag("--simplify-units", sa.simplify_units, "drop literals fixed by the unit clauses");
  };
  auto* sat_emit = sat->add_subcommand("emit", "write DIMACS");
  formula_opts(sat_emit);
  common(sat_emit, false, false, false, true);
  sat_emit->callback([&] { action = [&] { return run_sat_emit(sa, cfg); }; });
  auto* sat_solve = sat->add_subcommand("solve", "run an external solver");
  formula_opts(sat_solve);
  common(sat_solve, false, false, true, false);
  sat_solve->callback([&] { action = [&] { return run_sat_solve(sa, cfg); }; });
  auto* sat_verify = sat->add_subcommand("verify", "decode and check a model");
  sat_verify->add_option("--model", sa.model, "solver output or literal list")->required();
  sat_verify->add_option("--rank", sa.rank, "rank (inferred when omitted)");
  sat_verify->callback([&] { action = [&] { return run_sat_verify(sa); }; });

  auto* ml = app.add_subcommand("multilabel", "several labelings at once");
  ml->require_subcommand(1);
  int ml_k = 1;
  std::vector<std::string> ml_files;
  std::string ml_a;
  auto* ml_lb = ml->add_subcommand("lower-bound", "emit the 2^k-1 lower-bound instance");
  ml_lb->add_option("--k", ml_k)->required()->check(CLI::Range(1, 3));
  common(ml_lb, false, false, false, true);
  ml_lb->callback([&] { action = [&] { return run_multilabel_lower_bound(ml_k, cfg); }; });
  auto* ml_closest = ml->add_subcommand("closest", "closest valid basis to A");
  ml_closest->add_option("--instance", ml_files)->required();
  ml_closest->add_option("--a", ml_a, "start basis ids")->required();
  ml_closest->callback([&] { action = [&] { return run_multilabel_closest(ml_files, ml_a); }; });

  auto* mn = app.add_subcommand("minor", "uniform minors");
  mn->require_subcommand(1);
  std::string mn_file, mn_basis;
  int mn_k = 2;
  auto* mn_ex = mn->add_subcommand("extract", "U_{k,2k} B-minor of a sparse paving matroid");
  mn_ex->add_option("file", mn_file)->required();
  mn_ex->add_option("--k", mn_k)->capture_default_str();
  mn_ex->add_option("--basis", mn_basis, "basis B ids")->required();
  mn_ex->callback([&] { action = [&] { return run_minor_extract(mn_file, mn_k, mn_basis); }; });

  std::string rep_id;
  auto* rep = app.add_subcommand("reproduce", "run a scripted acceptance check");
  rep->add_option("id", rep_id, "criterion id, or all")->required();
  common(rep, true, true, true, false);
  rep->callback([&] { action = [&] { return run_reproduce(rep_id, cfg); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
