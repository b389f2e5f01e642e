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

#ifndef ACORN_SOLVER_H_
#define ACORN_SOLVER_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "acorn/formula.h"

namespace acorn {

struct SolverConfig {
  // {file} is replaced by the script path; run through /bin/sh.
  std::string command = "z3 -smt2 {file}";
  double timeout_seconds = 600;
  // Directory for script files; empty means $TMPDIR or /tmp.
  std::string script_dir;
  bool keep_scripts = false;

  // Defaults, with the command taken from ACORN_SOLVER when set.
  static SolverConfig FromEnvironment();
};

enum class SolveStatus : uint8_t { kSat, kUnsat, kUnknown, kTimeout, kError };

absl::string_view SolveStatusName(SolveStatus s);

struct SolverOutcome {
  SolveStatus status = SolveStatus::kError;
  Model model;        // kSat only; holds every declared variable.
  std::string error;  // kError and kUnknown.
  double seconds = 0;
};

// One solver process per call. `system` must be free of reaches atoms;
// `extra` is conjoined.
SolverOutcome Solve(const ConstraintSystem& system, const SolverConfig& config,
                    const std::vector<Term>& extra = {});

struct Enumeration {
  std::vector<Model> models;
  // kUnsat when the model space was exhausted, kSat when `limit` was hit,
  // otherwise the failing status.
  SolveStatus final_status = SolveStatus::kUnsat;
  std::string error;
};

// Repeatedly solves, blocking each model's assignment to `block_on` (bit-vector
// or boolean terms), until unsat or `limit` models.
Enumeration EnumerateModels(const ConstraintSystem& system,
                            const std::vector<Term>& block_on,
                            const SolverConfig& config, size_t limit,
                            std::vector<Term> extra = {});

}  // namespace acorn

#endif  // ACORN_SOLVER_H_
