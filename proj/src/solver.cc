// Copyright 2026 The Acorn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "acorn/solver.h"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_replace.h"
#include "acorn/smtlib.h"

namespace acorn {
namespace {

struct ProcessResult {
  std::string output;
  int exit_code = -1;
  bool timed_out = false;
  std::string spawn_error;
};

ProcessResult RunShell(const std::string& command, double timeout_seconds) {
  ProcessResult r;
  int fds[2];
  if (pipe(fds) != 0) {
    r.spawn_error = absl::StrCat("pipe: ", std::strerror(errno));
    return r;
  }
  const pid_t pid = fork();
  if (pid < 0) {
    r.spawn_error = absl::StrCat("fork: ", std::strerror(errno));
    close(fds[0]);
    close(fds[1]);
    return r;
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(fds[1], STDOUT_FILENO);
    dup2(fds[1], STDERR_FILENO);
    close(fds[0]);
    close(fds[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(fds[1]);
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration<double>(timeout_seconds);
  char buf[65536];
  while (true) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      r.timed_out = true;
      break;
    }
    pollfd p{fds[0], POLLIN, 0};
    const int ready = poll(&p, 1, static_cast<int>(std::min<int64_t>(left.count(), 1000)));
    if (ready < 0 && errno == EINTR) continue;
    if (ready <= 0) continue;
    const ssize_t n = read(fds[0], buf, sizeof(buf));
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    r.output.append(buf, static_cast<size_t>(n));
  }
  close(fds[0]);
  if (r.timed_out) kill(-pid, SIGKILL);
  int status = 0;
  while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string ScriptDir(const SolverConfig& config) {
  if (!config.script_dir.empty()) return config.script_dir;
  const char* tmp = std::getenv("TMPDIR");
  return tmp != nullptr && *tmp != '\0' ? tmp : "/tmp";
}

}  // namespace

SolverConfig SolverConfig::FromEnvironment() {
  SolverConfig config;
  if (const char* cmd = std::getenv("ACORN_SOLVER"); cmd != nullptr && *cmd != '\0') {
    config.command = cmd;
  }
  return config;
}

absl::string_view SolveStatusName(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSat:
      return "sat";
    case SolveStatus::kUnsat:
      return "unsat";
    case SolveStatus::kUnknown:
      return "unknown";
    case SolveStatus::kTimeout:
      return "timeout";
    case SolveStatus::kError:
      return "error";
  }
  return "?";
}

SolverOutcome Solve(const ConstraintSystem& system, const SolverConfig& config,
                    const std::vector<Term>& extra) {
  const auto start = std::chrono::steady_clock::now();
  SolverOutcome out;
  auto finish = [&]() {
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    return out;
  };
  auto script = EmitSmtLib(system, extra);
  if (!script.ok()) {
    out.error = std::string(script.status().message());
    return finish();
  }

  std::string path = absl::StrCat(ScriptDir(config), "/acorn-XXXXXX.smt2");
  const int fd = mkstemps(path.data(), 5);
  if (fd < 0) {
    out.error = absl::StrCat("cannot create script in ", ScriptDir(config), ": ",
                             std::strerror(errno));
    return finish();
  }
  size_t written = 0;
  while (written < script->size()) {
    const ssize_t n = write(fd, script->data() + written, script->size() - written);
    if (n <= 0) break;
    written += static_cast<size_t>(n);
  }
  close(fd);
  if (written != script->size()) {
    out.error = "short write of solver script";
    unlink(path.c_str());
    return finish();
  }

  const std::string command = absl::StrReplaceAll(config.command, {{"{file}", path}});
  ProcessResult proc = RunShell(command, config.timeout_seconds);
  if (!config.keep_scripts) unlink(path.c_str());

  if (!proc.spawn_error.empty()) {
    out.error = proc.spawn_error;
    return finish();
  }
  if (proc.timed_out) {
    out.status = SolveStatus::kTimeout;
    return finish();
  }
  auto exprs = ParseSExprs(proc.output);
  if (!exprs.ok() || exprs->empty() || !(*exprs)[0].is_atom) {
    out.error = absl::StrCat("unparsable solver output (exit ", proc.exit_code,
                             "): ", proc.output.substr(0, 400));
    return finish();
  }
  const std::string& head = (*exprs)[0].atom;
  if (head == "unsat") {
    out.status = SolveStatus::kUnsat;
    return finish();
  }
  if (head == "unknown") {
    out.status = SolveStatus::kUnknown;
    out.error = "solver returned unknown";
    return finish();
  }
  if (head != "sat") {
    out.error = absl::StrCat("solver failed (exit ", proc.exit_code,
                             "): ", proc.output.substr(0, 400));
    return finish();
  }
  if (exprs->size() < 2) {
    out.error = "sat without a model";
    return finish();
  }
  auto model = ParseModel((*exprs)[1]);
  if (!model.ok()) {
    out.error = std::string(model.status().message());
    return finish();
  }
  for (const VarDecl& v : system.vars()) {
    if (!model->Get(v.name)) model->Set(v.name, 0);
  }
  out.status = SolveStatus::kSat;
  out.model = *std::move(model);
  return finish();
}

Enumeration EnumerateModels(const ConstraintSystem& system,
                            const std::vector<Term>& block_on,
                            const SolverConfig& config, size_t limit,
                            std::vector<Term> extra) {
  Enumeration result;
  while (result.models.size() < limit) {
    SolverOutcome o = Solve(system, config, extra);
    if (o.status == SolveStatus::kUnsat) {
      result.final_status = SolveStatus::kUnsat;
      return result;
    }
    if (o.status != SolveStatus::kSat) {
      result.final_status = o.status;
      result.error = o.error;
      return result;
    }
    std::vector<Term> same;
    for (const Term& t : block_on) {
      const uint64_t v = Evaluate(t, o.model);
      same.push_back(t->is_bool() ? (v ? t : Not(t)) : Eq(t, BvConst(t->width, v)));
    }
    extra.push_back(Not(And(std::move(same))));
    result.models.push_back(std::move(o.model));
  }
  result.final_status = SolveStatus::kSat;
  return result;
}

}  // namespace acorn
