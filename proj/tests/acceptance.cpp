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

// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status: 0 all pass, 1 any failure, 3 otherwise undecided.

#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>

#include "criteria.hpp"

namespace {

int usage() {
  std::cerr << "usage: matprox_acceptance [--golden-dir DIR] [--cli PATH] [--solver CMD]\n"
               "                          [--sat-time-limit SECONDS] [--seed N]\n"
               "                          [--only ID]\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  namespace crit = matprox::criteria;
  crit::Options o;
  std::string only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (i + 1 >= argc) return usage();
    const std::string v = argv[++i];
    try {
      if (a == "--golden-dir") {
        o.golden_dir = v;
      } else if (a == "--cli") {
        o.cli_path = v;
      } else if (a == "--solver") {
        o.solver = v;
      } else if (a == "--sat-time-limit") {
        o.sat_time_limit = std::stod(v);
      } else if (a == "--seed") {
        o.seed = std::stoull(v);
      } else if (a == "--only") {
        only = v;
      } else {
        return usage();
      }
    } catch (const std::exception&) {
      return usage();
    }
  }

  int failed = 0, unknown = 0, ran = 0;
  std::cout << "seed " << o.seed << "\n";
  for (const auto& c : crit::all()) {
    if (!only.empty() && only != c.id && only != std::to_string(c.number)) continue;
    const crit::Result r = crit::run_timed(c, o);
    ++ran;
    if (r.status == crit::Status::kFail) ++failed;
    if (r.status == crit::Status::kUnknown) ++unknown;
    std::printf("criterion %2d %-24s %s - %s (%.1fs)\n", c.number, c.id,
                crit::status_name(r.status), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
  }
  if (ran == 0) return usage();
  std::printf("summary: %d run, %d passed, %d failed, %d unknown\n", ran,
              ran - failed - unknown, failed, unknown);
  if (failed > 0) return 1;
  return unknown > 0 ? 3 : 0;
}
