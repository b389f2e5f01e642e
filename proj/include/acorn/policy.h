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

#ifndef ACORN_POLICY_H_
#define ACORN_POLICY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "acorn/attribute.h"
#include "acorn/topology.h"

namespace acorn {

// Ordered-containment path pattern: an optional leading edge (a, b) followed
// by nodes c1 ... ck. Node order follows the direction announcements travel,
// i.e. starting from the destination side of the path. The pattern holds on
// a route iff the path from the destination to the announcing router
// traverses a->b (if given) and then visits c1, ..., ck in that order.
struct PathPattern {
  std::optional<Edge> leading_edge;
  std::vector<NodeId> nodes;

  bool empty() const { return !leading_edge && nodes.empty(); }
  bool operator==(const PathPattern&) const = default;
};

// `flow_path` lists the nodes from the destination to the announcing router,
// both inclusive.
bool PathMatches(const PathPattern& pattern, std::span<const NodeId> flow_path);

struct Match {
  enum class Kind : uint8_t { kAlways, kCommEquals, kCommHasTag, kPathContains };

  Kind kind = Kind::kAlways;
  uint32_t value = 0;  // comm value, or tag index for kCommHasTag.
  PathPattern path;

  bool operator==(const Match&) const = default;
};

struct Action {
  enum class Kind : uint8_t {
    kSetComm,
    kAddTag,
    kIncrComm,
    kSetLp,
    kSetMed,
    kDrop,
  };

  Kind kind = Kind::kDrop;
  uint32_t value = 0;  // tag index for kAddTag.

  bool operator==(const Action&) const = default;
};

struct MatchActionRule {
  Match match;
  std::vector<Action> actions;  // Empty means "allow".

  bool Drops() const;
  bool Writes(Field f) const;
  bool operator==(const MatchActionRule&) const = default;
};

// Rules are tried in order and the first match wins. Every edge then applies
// the implicit BGP tail: prepend the sender, lp reset to the default unless a
// rule set it, MED reset to 0, router ID set to the sender's, cost increased
// by `weight`, communities propagated.
struct EdgePolicy {
  std::vector<MatchActionRule> rules;
  uint32_t weight = 1;

  bool IsDefault() const { return rules.empty() && weight == 1; }
  bool HasDrop() const;
  bool operator==(const EdgePolicy&) const = default;
};

// Business relationship of the edge's source as seen by its target, using the
// GML labels: kCustomerToProvider ("cp") means `from` is a customer of `to`.
enum class EdgeRel : uint8_t {
  kCustomerToProvider,
  kProviderToCustomer,
  kPeer,
  kIntra,
};

absl::string_view EdgeRelName(EdgeRel r);
std::optional<EdgeRel> ParseEdgeRel(absl::string_view text);
EdgeRel Reverse(EdgeRel r);

struct SchemaDecl {
  CommMode comm_mode = CommMode::kBitmask;
  std::vector<std::string> tags;  // bitmask mode; bit i is tags[i].
  int counter_width = 2;          // counter mode.
  uint32_t default_lp = 100;
  uint32_t init_comm = 0;  // community value announced by the destination.

  int CommWidth() const;
  uint32_t CommMax() const;
  std::optional<uint32_t> FindTag(absl::string_view tag) const;
  bool operator==(const SchemaDecl&) const = default;
};

struct PolicyIR {
  SchemaDecl schema;
  std::vector<EdgePolicy> edge_policies;  // Indexed by EdgeId.
  // Indexed by EdgeId when present.
  std::optional<std::vector<EdgeRel>> relationships;

  bool operator==(const PolicyIR&) const = default;
};

// Checks that rules refer only to declared tags and to actions valid in the
// schema's comm mode, that drop is the sole action of its rule, and that
// path patterns use existing edges. Errors name the offending edge and rule.
absl::Status ValidatePolicy(const Topology& topo, const PolicyIR& policy);

// trans(e, a) for a concrete attribute `a` held by the edge's source.
// Returns kNoRoute when the first matching rule drops. Fields absent in `a`
// stay absent; as_path is extended when tracked.
Route ApplyTransfer(const SchemaDecl& schema, const EdgePolicy& policy,
                    const Edge& edge, const Attribute& a);

// First rule whose match holds on `a` at the sender, or nullptr.
const MatchActionRule* FirstMatch(const SchemaDecl& schema,
                                  const EdgePolicy& policy, NodeId sender,
                                  const Attribute& a);

}  // namespace acorn

#endif  // ACORN_POLICY_H_
