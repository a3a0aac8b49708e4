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

// Line-oriented text formats. A file holds one or more sections:
//
//   matroid n=<n> r=<r>        then  b <id> ...   (one line per basis)
//   sparsepaving n=<n> r=<r>   then  h <id> ...   (one line per hyperplane)
//   graph v=<count>            then  e <u> <v>    (edge id = line order)
//   labels group=<spec>        then  l <id> <value>
//   forbid <value> ...         (group of the preceding labels section)
//   target <value>             (multi-label target for the preceding labels)
//
// Blank lines and lines starting with '#' are ignored.

#ifndef MATPROX_IO_HPP
#define MATPROX_IO_HPP

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "matprox/constructions.hpp"
#include "matprox/element_set.hpp"
#include "matprox/labels.hpp"
#include "matprox/matroid.hpp"
#include "matprox/multilabel.hpp"
#include "matprox/proximity.hpp"

namespace matprox {

/// A malformed input; what() starts with "line <n>: ".
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct LabelSection {
  Labeling psi;
  std::optional<GroupElement> target;
  int line = 0;
};

struct InstanceFile {
  std::optional<Matroid> matroid;
  std::optional<SparsePavingRep> sparse_paving;
  std::optional<Graph> graph;
  std::vector<LabelSection> labels;
  std::optional<ForbiddenSet> forbidden;

  /// The matroid of whichever structure section is present.
  Matroid build_matroid() const {
    if (matroid) return *matroid;
    if (sparse_paving) return make_sparse_paving(*sparse_paving);
    if (graph) return make_graphic(*graph);
    throw std::invalid_argument("no matroid, sparsepaving or graph section");
  }

  /// Matroid + the first labeling + forbidden set (empty if absent).
  LabeledInstance labeled_instance() const {
    if (labels.empty()) throw std::invalid_argument("no labels section");
    const Labeling& psi = labels.front().psi;
    return LabeledInstance(build_matroid(), psi,
                           forbidden.value_or(ForbiddenSet(psi.group)));
  }

  /// Matroid + every labels section with its target (0 when absent).
  MultiLabelInstance multi_label_instance() const {
    std::vector<Constraint> cs;
    for (const auto& s : labels) {
      cs.push_back({s.psi, s.target.value_or(s.psi.group.zero())});
    }
    return MultiLabelInstance(build_matroid(), std::move(cs));
  }
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline int parse_int(std::string_view s, int line, const char* what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

/// key=value with the given key.
inline std::string_view keyed(std::string_view tok, std::string_view key,
                              int line) {
  if (tok.size() <= key.size() + 1 || tok.substr(0, key.size()) != key ||
      tok[key.size()] != '=') {
    throw ParseError(line, "expected " + std::string(key) + "=<value>, got '" +
                               std::string(tok) + "'");
  }
  return tok.substr(key.size() + 1);
}

inline ElementSet parse_set(const std::vector<std::string_view>& toks,
                            std::size_t from, int n, int line) {
  ElementSet s;
  for (std::size_t i = from; i < toks.size(); ++i) {
    const int e = parse_int(toks[i], line, "element id");
    if (e < 0 || e >= n) {
      throw ParseError(line, "element " + std::to_string(e) + " outside 0.." +
                                 std::to_string(n - 1));
    }
    if (s.contains(e)) {
      throw ParseError(line, "element " + std::to_string(e) + " repeated");
    }
    s = s.with(e);
  }
  return s;
}

}  // namespace detail

inline InstanceFile parse_instance(std::istream& in) {
  InstanceFile out;
  enum class Sec { kNone, kMatroid, kSparse, kGraph, kLabels };
  Sec sec = Sec::kNone;
  int n = 0, r = 0, header_line = 0;
  std::vector<ElementSet> sets;
  std::vector<std::optional<GroupElement>> values;
  std::optional<AbelianGroup> group;

  auto finish = [&] {
    try {
      switch (sec) {
        case Sec::kMatroid: {
          const AxiomVerdict v = validate_basis_axiom(n, r, sets);
          if (!v.holds) {
            throw ParseError(header_line,
                             sets.empty() ? std::string("no bases listed")
                                          : "bases violate the exchange axiom "
                                            "(B=" + to_string(v.first) +
                                                " B'=" + to_string(v.second) +
                                                " e=" + std::to_string(v.element) +
                                                ")");
          }
          out.matroid = Matroid::from_bases_unchecked(n, r, sets);
          break;
        }
        case Sec::kSparse: {
          SparsePavingRep rep{n, r, sets};
          rep.validate();
          out.sparse_paving = rep;
          break;
        }
        case Sec::kGraph:
          break;
        case Sec::kLabels: {
          std::vector<GroupElement> vals;
          for (int e = 0; e < n; ++e) {
            if (!values[e]) {
              throw ParseError(header_line, "no label for element " + std::to_string(e));
            }
            vals.push_back(*values[e]);
          }
          out.labels.push_back({Labeling(*group, std::move(vals)), std::nullopt,
                                header_line});
          break;
        }
        case Sec::kNone:
          break;
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(header_line, e.what());
    }
    sets.clear();
  };

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto toks = detail::split_ws(raw);
    if (toks.empty() || toks[0].front() == '#') continue;
    const std::string_view head = toks[0];
    try {
      if (head == "matroid" || head == "sparsepaving") {
        finish();
        if (toks.size() != 3) throw ParseError(lineno, "expected '" + std::string(head) + " n=<n> r=<r>'");
        n = detail::parse_int(detail::keyed(toks[1], "n", lineno), lineno, "n");
        r = detail::parse_int(detail::keyed(toks[2], "r", lineno), lineno, "r");
        if (n < 1 || n > kMaxElements || r < 0 || r > n) {
          throw ParseError(lineno, "need 1 <= n <= 64 and 0 <= r <= n");
        }
        if ((head == "matroid" && out.matroid) ||
            (head == "sparsepaving" && out.sparse_paving)) {
          throw ParseError(lineno, "duplicate " + std::string(head) + " section");
        }
        sec = head == "matroid" ? Sec::kMatroid : Sec::kSparse;
        header_line = lineno;
      } else if (head == "graph") {
        finish();
        if (toks.size() != 2) throw ParseError(lineno, "expected 'graph v=<count>'");
        if (out.graph) throw ParseError(lineno, "duplicate graph section");
        out.graph = Graph{detail::parse_int(detail::keyed(toks[1], "v", lineno), lineno, "v"), {}};
        if (out.graph->vertices < 1) throw ParseError(lineno, "graph needs v >= 1");
        sec = Sec::kGraph;
        header_line = lineno;
      } else if (head == "labels") {
        finish();
        if (toks.size() != 2) throw ParseError(lineno, "expected 'labels group=<spec>'");
        const auto spec = detail::keyed(toks[1], "group", lineno);
        try {
          group = AbelianGroup::parse(spec);
        } catch (const std::exception& e) {
          throw ParseError(lineno, e.what());
        }
        n = 0;
        values.clear();
        sec = Sec::kLabels;
        header_line = lineno;
      } else if (head == "b" || head == "h") {
        const Sec want = head == "b" ? Sec::kMatroid : Sec::kSparse;
        if (sec != want) throw ParseError(lineno, "'" + std::string(head) + "' line outside its section");
        const ElementSet s = detail::parse_set(toks, 1, n, lineno);
        if (s.size() != r) {
          throw ParseError(lineno, "set has " + std::to_string(s.size()) +
                                       " elements, expected " + std::to_string(r));
        }
        sets.push_back(s);
      } else if (head == "e") {
        if (sec != Sec::kGraph) throw ParseError(lineno, "'e' line outside a graph section");
        if (toks.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
        const int u = detail::parse_int(toks[1], lineno, "vertex");
        const int v = detail::parse_int(toks[2], lineno, "vertex");
        if (u < 0 || v < 0 || u >= out.graph->vertices || v >= out.graph->vertices) {
          throw ParseError(lineno, "vertex outside 0.." + std::to_string(out.graph->vertices - 1));
        }
        out.graph->edges.emplace_back(u, v);
      } else if (head == "l") {
        if (sec != Sec::kLabels) throw ParseError(lineno, "'l' line outside a labels section");
        if (toks.size() != 3) throw ParseError(lineno, "expected 'l <id> <value>'");
        const int e = detail::parse_int(toks[1], lineno, "element id");
        if (e < 0 || e >= kMaxElements) throw ParseError(lineno, "element id out of range");
        if (e >= static_cast<int>(values.size())) values.resize(e + 1);
        if (values[e]) throw ParseError(lineno, "element " + std::to_string(e) + " labeled twice");
        try {
          values[e] = group->parse_element(toks[2]);
        } catch (const std::exception& ex) {
          throw ParseError(lineno, ex.what());
        }
        n = static_cast<int>(values.size());
      } else if (head == "forbid" || head == "target") {
        if (sec == Sec::kLabels) {
          finish();
          sec = Sec::kNone;
        }
        if (out.labels.empty()) throw ParseError(lineno, "'" + std::string(head) + "' before any labels section");
        const AbelianGroup& g = out.labels.back().psi.group;
        std::vector<GroupElement> vals;
        for (std::size_t i = 1; i < toks.size(); ++i) {
          try {
            vals.push_back(g.parse_element(toks[i]));
          } catch (const std::exception& ex) {
            throw ParseError(lineno, ex.what());
          }
        }
        if (head == "forbid") {
          if (out.forbidden) throw ParseError(lineno, "duplicate forbid line");
          out.forbidden = ForbiddenSet(g, std::move(vals));
        } else {
          if (vals.size() != 1) throw ParseError(lineno, "expected 'target <value>'");
          if (out.labels.back().target) throw ParseError(lineno, "duplicate target");
          out.labels.back().target = vals.front();
        }
      } else {
        throw ParseError(lineno, "unknown line type '" + std::string(head) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  finish();
  std::optional<int> ground;
  if (out.matroid) ground = out.matroid->size();
  if (out.sparse_paving) ground = out.sparse_paving->n;
  if (out.graph) ground = static_cast<int>(out.graph->edges.size());
  for (const auto& s : out.labels) {
    if (ground && static_cast<int>(s.psi.values.size()) != *ground) {
      throw ParseError(s.line, "labels section has " + std::to_string(s.psi.values.size()) +
                                   " entries for a ground set of " + std::to_string(*ground));
    }
  }
  return out;
}

inline InstanceFile parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

inline InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_instance(in);
}

/// Loads several files as one instance (later sections add to earlier ones).
inline InstanceFile load_instances(const std::vector<std::string>& paths) {
  std::string all;
  for (const auto& p : paths) {
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot open " + p);
    std::stringstream ss;
    ss << in.rdbuf();
    all += ss.str();
    if (!all.empty() && all.back() != '\n') all += '\n';
  }
  return parse_instance_text(all);
}

// ---------------------------------------------------------------------------
// Writers.

inline std::string write_matroid(const Matroid& m) {
  std::string out = "matroid n=" + std::to_string(m.size()) +
                    " r=" + std::to_string(m.rank()) + "\n";
  for (ElementSet b : m.bases()) {
    out += "b";
    for (int e : b) out += " " + std::to_string(e);
    out += "\n";
  }
  return out;
}

inline std::string write_sparse_paving(const SparsePavingRep& rep) {
  std::string out = "sparsepaving n=" + std::to_string(rep.n) +
                    " r=" + std::to_string(rep.r) + "\n";
  std::vector<ElementSet> hs = rep.hyperplanes;
  std::sort(hs.begin(), hs.end(), LexLess{});
  for (ElementSet h : hs) {
    out += "h";
    for (int e : h) out += " " + std::to_string(e);
    out += "\n";
  }
  return out;
}

inline std::string write_graph(const Graph& g) {
  std::string out = "graph v=" + std::to_string(g.vertices) + "\n";
  for (const auto& [u, v] : g.edges) {
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

inline std::string write_labels(const Labeling& psi) {
  std::string out = "labels group=" + psi.group.spec() + "\n";
  for (int e = 0; e < psi.size(); ++e) {
    out += "l " + std::to_string(e) + " " + psi.group.format(psi[e]) + "\n";
  }
  return out;
}

inline std::string write_forbidden(const ForbiddenSet& f) {
  std::string out = "forbid";
  for (const auto& g : f.elements()) out += " " + f.group().format(g);
  return out + "\n";
}

inline std::string write_multi_label(const MultiLabelInstance& inst) {
  std::string out = write_matroid(inst.matroid);
  for (const auto& c : inst.constraints) {
    out += write_labels(c.psi);
    out += "target " + c.psi.group.format(c.f) + "\n";
  }
  return out;
}

}  // namespace matprox

#endif  // MATPROX_IO_HPP
