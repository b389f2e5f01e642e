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

#ifndef ACORN_AIR_H_
#define ACORN_AIR_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "acorn/attribute.h"
#include "acorn/instance.h"
#include "acorn/policy.h"
#include "acorn/topology.h"

namespace acorn {

// Line-oriented text format for a topology plus its routing policy.
//
//   # comment
//   SCHEMA comm=bitmask tags=c1,c2 [lp=100] [init=0]
//   SCHEMA comm=counter width=2 [lp=100] [init=0]
//   NODES n0 n1 ...
//   EDGES n0->n1 n1->n0 ...
//   DEST n0
//   REL n0->n1:cp ...
//   FAILED n0->n1 ...
//   POLICY n0->n1 [n1->n0 ...] [weight=N]:
//     match comm_has(c1) => set_lp(200)
//     match true => allow
//
// NODES, EDGES, REL and FAILED may repeat. Predicates: true, comm_has(tag),
// comm_eq(N), path_has(a->b,c,d). Actions: allow, drop, set_lp(N),
// set_med(N), set_comm(N), add_tag(tag), incr_comm(N); several actions are
// separated by commas. Edges without a POLICY block use the default policy.
struct AirModel {
  Topology topology;
  PolicyIR policy;
  Attribute init;
  std::vector<EdgeId> failed;  // Sorted, unique.

  bool operator==(const AirModel& o) const;
};

// Syntax errors read "line L col C: ..."; semantic errors name the offending
// edge and rule.
absl::StatusOr<AirModel> ParseAir(absl::string_view text);
absl::StatusOr<AirModel> ReadAirFile(const std::string& path);

// Canonical text: identical policies are grouped into one POLICY block and
// default policies are omitted. ParseAir(PrintAir(m)) == m.
std::string PrintAir(const AirModel& model);
std::string PrintAir(const SrpInstance& inst);

absl::StatusOr<SrpInstance> ToInstance(AirModel model,
                                       AbstractionLevel level = {});

}  // namespace acorn

#endif  // ACORN_AIR_H_
