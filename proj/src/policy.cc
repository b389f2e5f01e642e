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

#include "acorn/policy.h"

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace acorn {

bool PathMatches(const PathPattern& pattern, std::span<const NodeId> flow_path) {
  size_t pos = 0;
  if (pattern.leading_edge) {
    bool found = false;
    for (size_t i = 0; i + 1 < flow_path.size(); ++i) {
      if (flow_path[i] == pattern.leading_edge->from &&
          flow_path[i + 1] == pattern.leading_edge->to) {
        pos = i + 1;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  for (NodeId c : pattern.nodes) {
    while (pos < flow_path.size() && flow_path[pos] != c) ++pos;
    if (pos == flow_path.size()) return false;
  }
  return true;
}

bool MatchActionRule::Drops() const {
  return std::any_of(actions.begin(), actions.end(),
                     [](const Action& a) { return a.kind == Action::Kind::kDrop; });
}

bool MatchActionRule::Writes(Field f) const {
  for (const Action& a : actions) {
    switch (a.kind) {
      case Action::Kind::kSetComm:
      case Action::Kind::kAddTag:
      case Action::Kind::kIncrComm:
        if (f == Field::kComms) return true;
        break;
      case Action::Kind::kSetLp:
        if (f == Field::kLp) return true;
        break;
      case Action::Kind::kSetMed:
        if (f == Field::kMed) return true;
        break;
      case Action::Kind::kDrop:
        break;
    }
  }
  return false;
}

bool EdgePolicy::HasDrop() const {
  return std::any_of(rules.begin(), rules.end(),
                     [](const MatchActionRule& r) { return r.Drops(); });
}

absl::string_view EdgeRelName(EdgeRel r) {
  switch (r) {
    case EdgeRel::kCustomerToProvider:
      return "cp";
    case EdgeRel::kProviderToCustomer:
      return "pc";
    case EdgeRel::kPeer:
      return "pp";
    case EdgeRel::kIntra:
      return "intra";
  }
  return "?";
}

std::optional<EdgeRel> ParseEdgeRel(absl::string_view text) {
  if (text == "cp") return EdgeRel::kCustomerToProvider;
  if (text == "pc") return EdgeRel::kProviderToCustomer;
  if (text == "pp") return EdgeRel::kPeer;
  if (text == "intra") return EdgeRel::kIntra;
  return std::nullopt;
}

EdgeRel Reverse(EdgeRel r) {
  switch (r) {
    case EdgeRel::kCustomerToProvider:
      return EdgeRel::kProviderToCustomer;
    case EdgeRel::kProviderToCustomer:
      return EdgeRel::kCustomerToProvider;
    default:
      return r;
  }
}

int SchemaDecl::CommWidth() const {
  if (comm_mode == CommMode::kCounter) return counter_width;
  return std::max<int>(1, static_cast<int>(tags.size()));
}

uint32_t SchemaDecl::CommMax() const {
  const int w = CommWidth();
  return w >= 32 ? 0xffffffffu : ((1u << w) - 1);
}

std::optional<uint32_t> SchemaDecl::FindTag(absl::string_view tag) const {
  for (uint32_t i = 0; i < tags.size(); ++i) {
    if (tags[i] == tag) return i;
  }
  return std::nullopt;
}

absl::Status ValidatePolicy(const Topology& topo, const PolicyIR& policy) {
  const SchemaDecl& s = policy.schema;
  if (s.comm_mode == CommMode::kCounter &&
      (s.counter_width < 1 || s.counter_width > 32)) {
    return absl::InvalidArgumentError("counter width must be in [1, 32]");
  }
  if (s.comm_mode == CommMode::kBitmask && s.tags.size() > 32) {
    return absl::InvalidArgumentError("at most 32 community tags");
  }
  if (s.init_comm > s.CommMax()) {
    return absl::InvalidArgumentError("initial community exceeds comm width");
  }
  if (policy.edge_policies.size() != topo.num_edges()) {
    return absl::InvalidArgumentError("every topology edge needs a policy");
  }
  if (policy.relationships &&
      policy.relationships->size() != topo.num_edges()) {
    return absl::InvalidArgumentError("relationship list does not match edges");
  }
  const bool bitmask = s.comm_mode == CommMode::kBitmask;
  for (EdgeId e = 0; e < topo.num_edges(); ++e) {
    const EdgePolicy& p = policy.edge_policies[e];
    for (size_t i = 0; i < p.rules.size(); ++i) {
      const MatchActionRule& rule = p.rules[i];
      auto fail = [&](absl::string_view what) {
        return absl::InvalidArgumentError(absl::StrCat(
            "policy ", topo.EdgeName(e), " rule ", i + 1, ": ", what));
      };
      switch (rule.match.kind) {
        case Match::Kind::kCommHasTag:
          if (!bitmask) return fail("comm_has requires comm=bitmask");
          if (rule.match.value >= s.tags.size()) return fail("undeclared tag");
          break;
        case Match::Kind::kCommEquals:
          if (rule.match.value > s.CommMax()) {
            return fail("comm value exceeds comm width");
          }
          break;
        case Match::Kind::kPathContains: {
          const PathPattern& pp = rule.match.path;
          if (pp.leading_edge && !topo.FindEdge(pp.leading_edge->from,
                                                pp.leading_edge->to)) {
            return fail("path pattern edge is not a topology edge");
          }
          for (NodeId n : pp.nodes) {
            if (n >= topo.num_nodes()) return fail("unknown node in path");
          }
          break;
        }
        case Match::Kind::kAlways:
          break;
      }
      if (rule.Drops() && rule.actions.size() != 1) {
        return fail("drop cannot be combined with other actions");
      }
      for (const Action& a : rule.actions) {
        switch (a.kind) {
          case Action::Kind::kAddTag:
            if (!bitmask) return fail("add_tag requires comm=bitmask");
            if (a.value >= s.tags.size()) return fail("undeclared tag");
            break;
          case Action::Kind::kSetComm:
            if (a.value > s.CommMax()) return fail("comm value exceeds width");
            break;
          case Action::Kind::kIncrComm:
            if (a.value == 0 || a.value > s.CommMax()) {
              return fail("increment must be in [1, comm max]");
            }
            break;
          default:
            break;
        }
      }
    }
  }
  return absl::OkStatus();
}

const MatchActionRule* FirstMatch(const SchemaDecl& schema,
                                  const EdgePolicy& policy, NodeId sender,
                                  const Attribute& a) {
  (void)schema;
  std::vector<NodeId> flow_path;
  bool have_path = false;
  for (const MatchActionRule& rule : policy.rules) {
    bool hit = false;
    switch (rule.match.kind) {
      case Match::Kind::kAlways:
        hit = true;
        break;
      case Match::Kind::kCommEquals:
        hit = a.comms.has_value() && *a.comms == rule.match.value;
        break;
      case Match::Kind::kCommHasTag:
        hit = a.comms.has_value() && ((*a.comms >> rule.match.value) & 1u);
        break;
      case Match::Kind::kPathContains:
        if (!have_path) {
          if (a.as_path) {
            flow_path.assign(a.as_path->rbegin(), a.as_path->rend());
          }
          flow_path.push_back(sender);
          have_path = true;
        }
        hit = PathMatches(rule.match.path, flow_path);
        break;
    }
    if (hit) return &rule;
  }
  return nullptr;
}

Route ApplyTransfer(const SchemaDecl& schema, const EdgePolicy& policy,
                    const Edge& edge, const Attribute& a) {
  const MatchActionRule* rule = FirstMatch(schema, policy, edge.from, a);
  if (rule != nullptr && rule->Drops()) return kNoRoute;

  Attribute out = a;
  if (out.lp) out.lp = schema.default_lp;
  if (out.path_len) out.path_len = static_cast<uint16_t>(*a.path_len + 1);
  if (out.med) out.med = 0;
  if (out.router_id) out.router_id = edge.from;
  if (out.cost) out.cost = *a.cost + policy.weight;
  if (out.as_path) out.as_path->insert(out.as_path->begin(), edge.from);

  if (rule == nullptr) return out;
  const uint32_t comm_max = schema.CommMax();
  for (const Action& act : rule->actions) {
    switch (act.kind) {
      case Action::Kind::kSetComm:
        if (out.comms) out.comms = act.value;
        break;
      case Action::Kind::kAddTag:
        if (out.comms) *out.comms |= (1u << act.value);
        break;
      case Action::Kind::kIncrComm:
        if (out.comms) {
          out.comms = *out.comms > comm_max - act.value ? comm_max
                                                         : *out.comms + act.value;
        }
        break;
      case Action::Kind::kSetLp:
        if (out.lp) out.lp = act.value;
        break;
      case Action::Kind::kSetMed:
        if (out.med) out.med = act.value;
        break;
      case Action::Kind::kDrop:
        break;
    }
  }
  return out;
}

}  // namespace acorn
