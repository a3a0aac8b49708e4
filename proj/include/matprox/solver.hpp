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

// External SAT solver as a subprocess: `<command> <cnf-path>`, output in the
// competition format (`s ...` status line, `v ...` literal lines).

#ifndef MATPROX_SOLVER_HPP
#define MATPROX_SOLVER_HPP

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matprox/satgen.hpp"

namespace matprox {

enum class SatStatus { kSat, kUnsat, kUnknown };

inline std::string to_string(SatStatus s) {
  switch (s) {
    case SatStatus::kSat: return "SATISFIABLE";
    case SatStatus::kUnsat: return "UNSATISFIABLE";
    case SatStatus::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

struct SolverResult {
  SatStatus status = SatStatus::kUnknown;
  std::optional<std::vector<bool>> assignment;  ///< index 1..num_vars
  double wall_seconds = 0;
  std::string diagnostics;
};

/// Parses solver stdout. A SAT claim without a model that satisfies `f`
/// becomes UNKNOWN.
inline SolverResult parse_solver_output(const std::string& text,
                                        const CnfFormula& f) {
  SolverResult res;
  std::optional<SatStatus> status;
  std::vector<bool> value(f.num_vars() + 1, false);
  bool saw_values = false;
  bool terminated = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("s ", 0) == 0) {
      const std::string s = line.substr(2);
      if (s == "SATISFIABLE") {
        status = SatStatus::kSat;
      } else if (s == "UNSATISFIABLE") {
        status = SatStatus::kUnsat;
      } else {
        status = SatStatus::kUnknown;
      }
    } else if (line.rfind("v ", 0) == 0 || line == "v") {
      saw_values = true;
      std::istringstream lits(line.substr(1));
      long long l = 0;
      while (lits >> l) {
        if (l == 0) {
          terminated = true;
          continue;
        }
        const long long v = l < 0 ? -l : l;
        if (v > f.num_vars()) {
          res.diagnostics = "model literal " + std::to_string(l) +
                            " exceeds variable count";
          return res;
        }
        value[static_cast<std::size_t>(v)] = l > 0;
      }
    }
  }
  if (!status) {
    res.diagnostics = "no status line in solver output";
    return res;
  }
  if (*status == SatStatus::kSat) {
    if (!saw_values || !terminated) {
      res.diagnostics = "SATISFIABLE without a complete model";
      return res;
    }
    if (!f.satisfied_by(value)) {
      res.diagnostics = "reported model violates the formula";
      return res;
    }
    res.assignment = std::move(value);
  }
  res.status = *status;
  return res;
}

/// `$SAT_SOLVER`, or empty.
inline std::string default_solver_command() {
  const char* env = std::getenv("SAT_SOLVER");
  return env ? std::string(env) : std::string();
}

/// Writes the formula to a temporary file and runs `command <path>` through
/// /bin/sh. Spawn failures, timeouts and unparseable output give UNKNOWN
/// with diagnostics. time_limit_seconds <= 0 means no limit.
inline SolverResult run_solver(const CnfFormula& f, const std::string& command,
                               double time_limit_seconds = 0) {
  SolverResult res;
  if (command.empty()) {
    res.diagnostics = "no solver command (set --solver or SAT_SOLVER)";
    return res;
  }
  namespace fs = std::filesystem;
  std::string templ = (fs::temp_directory_path() / "matprox-XXXXXX.cnf").string();
  std::vector<char> path(templ.begin(), templ.end());
  path.push_back('\0');
  const int fd = mkstemps(path.data(), 4);
  if (fd < 0) {
    res.diagnostics = std::string("cannot create temp file: ") + std::strerror(errno);
    return res;
  }
  close(fd);
  const std::string cnf_path(path.data());
  {
    std::ofstream out(cnf_path, std::ios::binary);
    out << emit_dimacs(f);
    if (!out) {
      res.diagnostics = "cannot write " + cnf_path;
      fs::remove(cnf_path);
      return res;
    }
  }
  int out_pipe[2];
  int err_pipe[2];
  if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
    res.diagnostics = "pipe failed";
    fs::remove(cnf_path);
    return res;
  }
  const auto start = std::chrono::steady_clock::now();
  const std::string shell = "exec " + command + " '" + cnf_path + "'";
  const pid_t pid = fork();
  if (pid < 0) {
    res.diagnostics = "fork failed";
    fs::remove(cnf_path);
    return res;
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    close(out_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[0]);
    close(err_pipe[1]);
    execl("/bin/sh", "sh", "-c", shell.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(out_pipe[1]);
  close(err_pipe[1]);
  std::string out_text, err_text;
  bool timed_out = false;
  pollfd fds[2] = {{out_pipe[0], POLLIN, 0}, {err_pipe[0], POLLIN, 0}};
  int open_fds = 2;
  char buf[65536];
  while (open_fds > 0) {
    int wait_ms = -1;
    if (time_limit_seconds > 0) {
      const double elapsed = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
      if (elapsed >= time_limit_seconds) {
        timed_out = true;
        kill(-pid, SIGKILL);
        break;
      }
      wait_ms = static_cast<int>((time_limit_seconds - elapsed) * 1000) + 1;
    }
    const int rc = poll(fds, 2, wait_ms);
    if (rc < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (auto& p : fds) {
      if (p.fd < 0 || !(p.revents & (POLLIN | POLLHUP | POLLERR))) continue;
      const ssize_t got = read(p.fd, buf, sizeof buf);
      if (got <= 0) {
        close(p.fd);
        p.fd = -1;
        --open_fds;
      } else {
        (p.fd == out_pipe[0] ? out_text : err_text).append(buf, got);
      }
    }
  }
  for (auto& p : fds) {
    if (p.fd >= 0) close(p.fd);
  }
  int wstatus = 0;
  waitpid(pid, &wstatus, 0);
  res.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  fs::remove(cnf_path);
  if (timed_out) {
    res.diagnostics = "time limit reached";
    return res;
  }
  if (WIFEXITED(wstatus) && WEXITSTATUS(wstatus) == 127) {
    res.diagnostics = "solver command not found: " + command;
    return res;
  }
  SolverResult parsed = parse_solver_output(out_text, f);
  parsed.wall_seconds = res.wall_seconds;
  if (parsed.status == SatStatus::kUnknown && !err_text.empty()) {
    parsed.diagnostics += (parsed.diagnostics.empty() ? "" : "; ") +
                          std::string("stderr: ") + err_text.substr(0, 500);
  }
  return parsed;
}

}  // namespace matprox

#endif  // MATPROX_SOLVER_HPP
