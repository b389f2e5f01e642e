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

#ifndef ACORN_VERIFIER_H_
#define ACORN_VERIFIER_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "acorn/abstraction.h"
#include "acorn/encoder.h"
#include "acorn/formula.h"
#include "acorn/instance.h"
#include "acorn/oracle.h"
#include "acorn/property.h"
#include "acorn/solver.h"

namespace acorn {

// Negation of `p` over the encoding variables: a model of the encoding plus
// this term is a routing tree that violates the property.
absl::StatusOr<Term> EncodeProperty(const PropertySpec& p, const SrpInstance& inst,
                                    const VarTable& vars, BackendKind backend);

// Copy of `inst` analyzed at `level` with the schema pruned for `p`.
SrpInstance AtLevel(const SrpInstance& inst, const AbstractionLevel& level,
                    const PropertySpec& p);

// The nChoice variables, the terms model enumeration blocks on.
std::vector<Term> ChoiceTerms(const VarTable& vars);

// Reads the routing tree out of a model.
ChoiceFunction DecodeChoice(const Topology& topo, const VarTable& vars,
                            const Model& model);

struct Counterexample {
  ChoiceFunction choice;
  // Decoded values of the tracked fields; NoRoute where hasRoute is false.
  std::vector<Route> attrs;
  PropertySpec property;
  AbstractionLevel level;
};

Counterexample DecodeCounterexample(const SrpInstance& inst,
                                    const Encoding& encoding,
                                    const PropertySpec& property,
                                    const Model& model);

struct Validation {
  bool genuine = false;
  NodeId node = 0;       // Spurious only: the node whose choice fails.
  std::string evidence;  // Spurious only.
  std::optional<Labeling> labeling;  // Concrete labeling when propagation works.
};

// Replays the tree on the concrete instance. Genuine iff the labeling is a
// full-level solution and violates the property.
Validation ValidateCounterexample(const SrpInstance& inst,
                                  const Counterexample& cex);

struct VerifyConfig {
  SolverConfig solver;
  EncoderOptions encoder;
};

enum class RefineMode : uint8_t { kNone, kEscalate, kBlock };

struct RefinePolicy {
  RefineMode mode = RefineMode::kEscalate;
  int max_block_iterations = 32;
};

absl::StatusOr<RefineMode> ParseRefineMode(absl::string_view text);

struct VerifyStep {
  AbstractionLevel level;
  SolveStatus status = SolveStatus::kError;
  double seconds = 0;
  size_t num_vars = 0;
  size_t num_assertions = 0;
  std::optional<Validation> validation;  // Sat only.
};

struct Verdict {
  enum class Kind : uint8_t { kVerified, kViolated, kFalsePositive, kUnknown };

  Kind kind = Kind::kUnknown;
  // Violated: the genuine counterexample. FalsePositive: the last spurious one.
  std::optional<Counterexample> counterexample;
  AbstractionLevel level;  // Level of the deciding query.
  int refinements = 0;     // Escalations plus blocked trees.
  std::vector<VerifyStep> trace;
  std::string detail;
  double seconds = 0;
};

absl::string_view VerdictKindName(Verdict::Kind k);

// Solves encoding(inst.level) and the negated property; unsat is Verified,
// a genuine model is Violated and a spurious one triggers refinement.
absl::StatusOr<Verdict> Verify(const SrpInstance& inst, const PropertySpec& p,
                               const VerifyConfig& config,
                               const RefinePolicy& refine = {});

// Multi-line rendering of a counterexample tree.
std::string CounterexampleToString(const SrpInstance& inst,
                                   const Counterexample& cex);

}  // namespace acorn

#endif  // ACORN_VERIFIER_H_
