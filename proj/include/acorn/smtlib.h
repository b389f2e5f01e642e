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

#ifndef ACORN_SMTLIB_H_
#define ACORN_SMTLIB_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "acorn/formula.h"
#include "acorn/topology.h"

namespace acorn {

// Replaces every reaches(x, y) atom by a boolean reach_x_y defined through a
// well-founded distance labeling over the routing-edge variables `re`
// (indexed by EdgeId of `topo`).
ConstraintSystem LowerReaches(const ConstraintSystem& system,
                              const Topology& topo, const std::vector<Term>& re);

// QF_BV script with one (check-sat) and one (get-model). Subterms shared by
// several parents are emitted once through define-fun. Fails if the system
// still contains reaches atoms. `extra` is asserted after the system.
absl::StatusOr<std::string> EmitSmtLib(const ConstraintSystem& system,
                                       const std::vector<Term>& extra = {});

struct SExpr {
  bool is_atom = true;
  std::string atom;
  std::vector<SExpr> list;
};

absl::StatusOr<std::vector<SExpr>> ParseSExprs(absl::string_view text);

// Reads the body of a (get-model) response: (define-fun name () Sort value)
// entries with values true, false, #b..., #x... or (_ bvN w). Entries named
// $... are the emitter's own definitions and are skipped.
absl::StatusOr<Model> ParseModel(const SExpr& model);

}  // namespace acorn

#endif  // ACORN_SMTLIB_H_
