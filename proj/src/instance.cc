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

#include "acorn/instance.h"

#include <utility>

#include "acorn/status_macros.h"

namespace acorn {

std::vector<EdgeId> SrpInstance::FailedEdges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < failed.size(); ++e) {
    if (failed[e]) out.push_back(e);
  }
  return out;
}

Route SrpInstance::Transfer(EdgeId e, const Route& r) const {
  if (!r.has_value() || IsFailed(e)) return kNoRoute;
  return ApplyTransfer(policy.schema, policy.edge_policies[e],
                       topology.edge(e), *r);
}

Attribute InitialAttribute(const Topology& topo, const SchemaDecl& schema) {
  Attribute a;
  a.lp = schema.default_lp;
  a.path_len = 0;
  a.comms = schema.init_comm;
  a.med = 0;
  a.router_id = topo.dest();
  a.cost = 0;
  a.as_path = std::vector<NodeId>{};
  return a;
}

absl::StatusOr<SrpInstance> MakeInstance(Topology topology, PolicyIR policy,
                                         AbstractionLevel level) {
  RETURN_IF_ERROR(ValidatePolicy(topology, policy));
  SrpInstance inst;
  inst.init = InitialAttribute(topology, policy.schema);
  inst.schema.comm_mode = policy.schema.comm_mode;
  inst.schema.comm_width = policy.schema.CommWidth();
  inst.level = level;
  inst.failed.assign(topology.num_edges(), false);
  inst.topology = std::move(topology);
  inst.policy = std::move(policy);
  return inst;
}

namespace {

bool GuardReadsComms(const Match& m) {
  return m.kind == Match::Kind::kCommEquals ||
         m.kind == Match::Kind::kCommHasTag;
}

// Whether the outcome (drop, or value written to `f`) of this edge's rule list
// depends on the sender's communities through some guard. With first-match
// semantics every guard up to the last relevant rule matters.
bool OutcomeReadsComms(const EdgePolicy& p, bool for_drop, Field f) {
  int last = -1;
  for (size_t i = 0; i < p.rules.size(); ++i) {
    if (for_drop ? p.rules[i].Drops() : p.rules[i].Writes(f)) {
      last = static_cast<int>(i);
    }
  }
  for (int i = 0; i <= last; ++i) {
    if (GuardReadsComms(p.rules[i].match)) return true;
  }
  return false;
}

}  // namespace

AttributeSchema PruneSchema(const PolicyIR& policy, const PropertySpec& property,
                            const AbstractionLevel& level) {
  AttributeSchema schema;
  schema.comm_mode = policy.schema.comm_mode;
  schema.comm_width = policy.schema.CommWidth();

  FieldSet needed = level.ComparedFields();
  needed.InsertAll(property.Fields());
  for (const EdgePolicy& p : policy.edge_policies) {
    if (OutcomeReadsComms(p, /*for_drop=*/true, Field::kComms)) {
      needed.Insert(Field::kComms);
    }
  }
  // Selection-relevant fields written under comm guards pull comms in. Comms
  // only ever depend on comms, so one pass reaches the fixed point.
  for (Field f : needed.ToVector()) {
    if (f == Field::kComms) continue;
    for (const EdgePolicy& p : policy.edge_policies) {
      if (OutcomeReadsComms(p, /*for_drop=*/false, f)) {
        needed.Insert(Field::kComms);
        break;
      }
    }
  }
  if (level.IsFull()) {
    for (const EdgePolicy& p : policy.edge_policies) {
      for (const MatchActionRule& r : p.rules) {
        if (GuardReadsComms(r.match) || r.Writes(Field::kComms)) {
          needed.Insert(Field::kComms);
        }
      }
    }
  }
  schema.active = needed;
  return schema;
}

SrpInstance WithFailuresAsDropRules(const SrpInstance& inst) {
  SrpInstance out = inst;
  for (EdgeId e = 0; e < out.topology.num_edges(); ++e) {
    if (!inst.IsFailed(e)) continue;
    EdgePolicy& p = out.policy.edge_policies[e];
    p.rules = {MatchActionRule{Match{}, {Action{Action::Kind::kDrop, 0}}}};
  }
  out.failed.assign(out.topology.num_edges(), false);
  return out;
}

}  // namespace acorn
