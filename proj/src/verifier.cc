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

#include "acorn/verifier.h"

#include <chrono>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "acorn/smtlib.h"
#include "acorn/status_macros.h"

namespace acorn {
namespace {

using Kind = PropertySpec::Kind;

Term NChoiceIsNone(const Topology& topo, const VarTable& vars, NodeId u) {
  return Eq(vars.nchoice[u], BvConst(vars.nchoice_width[u], NoneId(topo, u)));
}

double Elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// Finds the node whose chosen route cannot be derived from the destination.
Validation Unpropagatable(const SrpInstance& inst, const ChoiceFunction& choice) {
  const Topology& topo = inst.topology;
  const size_t n = topo.num_nodes();
  for (NodeId u = 0; u < n; ++u) {
    if (u == topo.dest() || choice[u] < 0) continue;
    std::vector<EdgeId> chain;
    NodeId w = u;
    while (w != topo.dest() && choice[w] >= 0 && chain.size() <= n) {
      chain.push_back(topo.in_edges(w)[choice[w]]);
      w = topo.edge(chain.back()).from;
    }
    if (chain.size() > n) {
      return {false, u, absl::StrCat("routing loop through ", topo.name(u)), {}};
    }
    if (w != topo.dest()) {
      return {false, u,
              absl::StrCat(topo.name(u), " chains to ", topo.name(w),
                           " which has no route"),
              {}};
    }
    Route r = inst.init;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      r = inst.Transfer(*it, r);
      if (!r) {
        const NodeId to = topo.edge(*it).to;
        return {false, to,
                absl::StrCat("the route ", topo.name(to), " picks is dropped on ",
                             topo.EdgeName(*it)),
                {}};
      }
    }
  }
  return {false, topo.dest(), "tree does not propagate from the destination", {}};
}

}  // namespace

absl::StatusOr<Term> EncodeProperty(const PropertySpec& p, const SrpInstance& inst,
                                    const VarTable& vars, BackendKind backend) {
  const Topology& topo = inst.topology;
  RETURN_IF_ERROR(ValidateProperty(p, topo, inst.policy));
  const NodeId d = topo.dest();
  switch (p.kind) {
    case Kind::kReach:
      if (p.node == d) return False();
      return NChoiceIsNone(topo, vars, p.node);
    case Kind::kReachAll: {
      std::vector<Term> any;
      for (NodeId u = 0; u < topo.num_nodes(); ++u) {
        if (u != d) any.push_back(NChoiceIsNone(topo, vars, u));
      }
      return Or(std::move(any));
    }
    case Kind::kIsolation:
      if (p.node == d) return True();
      return Not(NChoiceIsNone(topo, vars, p.node));
    case Kind::kNoTransit: {
      const std::vector<EdgeRel>& rels = *inst.policy.relationships;
      std::vector<Term> any;
      for (NodeId u = 0; u < topo.num_nodes(); ++u) {
        for (EdgeId in : topo.in_edges(u)) {
          if (!IsPeerOrProviderEdgeIn(rels[in])) continue;
          for (EdgeId out : topo.out_edges(u)) {
            if (topo.edge(out).to == topo.edge(in).from) continue;
            if (!IsPeerOrProviderEdgeOut(rels[out])) continue;
            any.push_back(And(vars.re[in], vars.re[out]));
          }
        }
      }
      return Or(std::move(any));
    }
    case Kind::kCommEquals: {
      const Term comm = vars.attr_of(Field::kComms, p.node);
      if (comm == nullptr) {
        return absl::InternalError("community field is not tracked");
      }
      if (p.value > WidthMask(comm->width)) return False();
      return And(vars.has_route[p.node], Eq(comm, BvConst(comm->width, p.value)));
    }
    case Kind::kPathRegexHolds: {
      ASSIGN_OR_RETURN(Term match,
                       EncodePathRegex(p.pattern, p.node, topo, vars, backend));
      return And(vars.has_route[p.node], Not(match));
    }
  }
  return absl::InternalError("unknown property kind");
}

SrpInstance AtLevel(const SrpInstance& inst, const AbstractionLevel& level,
                    const PropertySpec& p) {
  SrpInstance out = inst;
  out.level = level;
  out.schema = PruneSchema(inst.policy, p, level);
  return out;
}

std::vector<Term> ChoiceTerms(const VarTable& vars) {
  std::vector<Term> out;
  for (const Term& t : vars.nchoice) {
    if (t != nullptr) out.push_back(t);
  }
  return out;
}

ChoiceFunction DecodeChoice(const Topology& topo, const VarTable& vars,
                            const Model& model) {
  ChoiceFunction choice(topo.num_nodes(), -1);
  for (NodeId u = 0; u < topo.num_nodes(); ++u) {
    if (vars.nchoice[u] == nullptr) continue;
    const uint64_t c = Evaluate(vars.nchoice[u], model);
    if (c < topo.in_edges(u).size()) choice[u] = static_cast<int32_t>(c);
  }
  return choice;
}

Counterexample DecodeCounterexample(const SrpInstance& inst,
                                    const Encoding& encoding,
                                    const PropertySpec& property,
                                    const Model& model) {
  const Topology& topo = inst.topology;
  Counterexample cex;
  cex.choice = DecodeChoice(topo, encoding.vars, model);
  cex.property = property;
  cex.level = encoding.level;
  cex.attrs.assign(topo.num_nodes(), kNoRoute);
  for (NodeId u = 0; u < topo.num_nodes(); ++u) {
    if (Evaluate(encoding.vars.has_route[u], model) == 0) continue;
    Attribute a;
    for (int f = 0; f < kNumFields; ++f) {
      const Term& t = encoding.vars.attr[f][u];
      if (t != nullptr) a.Set(static_cast<Field>(f), Evaluate(t, model));
    }
    cex.attrs[u] = std::move(a);
  }
  return cex;
}

Validation ValidateCounterexample(const SrpInstance& inst,
                                  const Counterexample& cex) {
  std::optional<Labeling> labeling = PropagateChoices(inst, cex.choice);
  if (!labeling) return Unpropagatable(inst, cex.choice);
  const AbstractionLevel full =
      AbstractionLevel::Hierarchy(inst.level.protocol()).back();
  Validation v;
  if (auto bad = FindInstability(inst, full, *labeling)) {
    v.node = bad->node;
    v.evidence = bad->reason;
  } else if (PropertyHolds(cex.property, inst, *labeling)) {
    v.node = inst.topology.dest();
    v.evidence = "the concrete labeling satisfies the property";
  } else {
    v.genuine = true;
  }
  v.labeling = std::move(labeling);
  return v;
}

absl::StatusOr<RefineMode> ParseRefineMode(absl::string_view text) {
  if (text == "none") return RefineMode::kNone;
  if (text == "escalate") return RefineMode::kEscalate;
  if (text == "block") return RefineMode::kBlock;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown refinement mode '", text, "'"));
}

absl::string_view VerdictKindName(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::kVerified:
      return "Verified";
    case Verdict::Kind::kViolated:
      return "Violated";
    case Verdict::Kind::kFalsePositive:
      return "FalsePositive";
    case Verdict::Kind::kUnknown:
      return "Unknown";
  }
  return "?";
}

absl::StatusOr<Verdict> Verify(const SrpInstance& inst, const PropertySpec& p,
                               const VerifyConfig& config,
                               const RefinePolicy& refine) {
  const auto start = std::chrono::steady_clock::now();
  RETURN_IF_ERROR(ValidateProperty(p, inst.topology, inst.policy));
  Verdict verdict;
  AbstractionLevel level = inst.level;
  std::vector<Term> blocked;
  int blocks = 0;
  while (true) {
    const SrpInstance at = AtLevel(inst, level, p);
    ASSIGN_OR_RETURN(Encoding enc, Encode(at, config.encoder));
    ASSIGN_OR_RETURN(Term negation,
                     EncodeProperty(p, at, enc.vars, config.encoder.backend));
    ConstraintSystem system = enc.system;
    system.Assert(negation);
    for (const Term& b : blocked) system.Assert(b);
    if (system.HasReaches()) {
      system = LowerReaches(system, at.topology, enc.vars.re);
    }

    VerifyStep step;
    step.level = level;
    step.num_vars = system.vars().size();
    step.num_assertions = system.assertions().size();
    const SolverOutcome outcome = Solve(system, config.solver);
    step.status = outcome.status;
    step.seconds = outcome.seconds;
    verdict.level = level;

    if (outcome.status == SolveStatus::kError) {
      return absl::InternalError(absl::StrCat("solver failed: ", outcome.error));
    }
    if (outcome.status != SolveStatus::kSat &&
        outcome.status != SolveStatus::kUnsat) {
      verdict.trace.push_back(std::move(step));
      verdict.kind = Verdict::Kind::kUnknown;
      verdict.detail = outcome.status == SolveStatus::kTimeout
                           ? "solver timed out"
                           : absl::StrCat("solver returned unknown: ", outcome.error);
      break;
    }
    if (outcome.status == SolveStatus::kUnsat) {
      verdict.trace.push_back(std::move(step));
      verdict.kind = Verdict::Kind::kVerified;
      break;
    }

    Counterexample cex = DecodeCounterexample(at, enc, p, outcome.model);
    Validation v = ValidateCounterexample(inst, cex);
    step.validation = v;
    verdict.trace.push_back(std::move(step));
    if (v.genuine) {
      verdict.kind = Verdict::Kind::kViolated;
      verdict.counterexample = std::move(cex);
      break;
    }

    std::optional<AbstractionLevel> next;
    if (refine.mode == RefineMode::kEscalate) next = level.Refined();
    const bool can_block = refine.mode == RefineMode::kBlock &&
                           blocks < refine.max_block_iterations;
    if (!next && !can_block) {
      verdict.kind = Verdict::Kind::kFalsePositive;
      verdict.detail = absl::StrCat("spurious at ", inst.topology.name(v.node),
                                    ": ", v.evidence);
      verdict.counterexample = std::move(cex);
      break;
    }
    ++verdict.refinements;
    if (next) {
      level = *next;
      blocked.clear();
    } else {
      ++blocks;
      std::vector<Term> same;
      for (NodeId u = 0; u < inst.topology.num_nodes(); ++u) {
        const Term& t = enc.vars.nchoice[u];
        if (t == nullptr) continue;
        same.push_back(Eq(t, BvConst(t->width, Evaluate(t, outcome.model))));
      }
      blocked.push_back(Not(And(std::move(same))));
    }
  }
  verdict.seconds = Elapsed(start);
  return verdict;
}

std::string CounterexampleToString(const SrpInstance& inst,
                                   const Counterexample& cex) {
  const Topology& topo = inst.topology;
  std::string out;
  for (NodeId u = 0; u < topo.num_nodes(); ++u) {
    absl::StrAppend(&out, "  ", topo.name(u));
    if (u == topo.dest()) {
      absl::StrAppend(&out, " (destination)");
    } else if (cex.choice[u] < 0) {
      absl::StrAppend(&out, " <- none");
    } else {
      absl::StrAppend(&out, " <- ",
                      topo.name(topo.edge(topo.in_edges(u)[cex.choice[u]]).from));
    }
    if (cex.attrs[u]) absl::StrAppend(&out, "  ", cex.attrs[u]->DebugString(&topo));
    absl::StrAppend(&out, "\n");
  }
  return out;
}

}  // namespace acorn
