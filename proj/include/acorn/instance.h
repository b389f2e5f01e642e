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

#ifndef ACORN_INSTANCE_H_
#define ACORN_INSTANCE_H_

#include <vector>

#include "absl/status/statusor.h"
#include "acorn/abstraction.h"
#include "acorn/attribute.h"
#include "acorn/policy.h"
#include "acorn/property.h"
#include "acorn/topology.h"

namespace acorn {

// An SRP (G, A, a_d, order, trans) together with the abstraction level it is
// analyzed at and the set of failed links. trans over a failed edge yields
// NoRoute, and trans(e, NoRoute) = NoRoute.
struct SrpInstance {
  Topology topology;
  PolicyIR policy;
  AttributeSchema schema;  // Fields tracked symbolically.
  Attribute init;          // a_d, fully populated.
  AbstractionLevel level;
  std::vector<bool> failed;  // Indexed by EdgeId.

  bool IsFailed(EdgeId e) const { return !failed.empty() && failed[e]; }
  std::vector<EdgeId> FailedEdges() const;

  // trans_F(e, r) on concrete routes.
  Route Transfer(EdgeId e, const Route& r) const;
};

// Full concrete a_d: lp default, empty path, declared initial community,
// router ID of the destination, zero MED and cost.
Attribute InitialAttribute(const Topology& topo, const SchemaDecl& schema);

// Validates the policy against the topology and fills in the derived pieces
// (full schema, a_d, no failures).
absl::StatusOr<SrpInstance> MakeInstance(Topology topology, PolicyIR policy,
                                         AbstractionLevel level = {});

// The tracked fields: fields compared by `level`, fields the property reads,
// and every field that can influence them or route filtering through rule
// guards. Fields used only for selection at finer levels are removed.
AttributeSchema PruneSchema(const PolicyIR& policy, const PropertySpec& property,
                            const AbstractionLevel& level);

// Copy of `inst` with no failure set whose failed edges instead carry a
// single "match true => drop" rule.
SrpInstance WithFailuresAsDropRules(const SrpInstance& inst);

}  // namespace acorn

#endif  // ACORN_INSTANCE_H_
