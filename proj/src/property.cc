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

#include "acorn/property.h"

#include <vector>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "acorn/status_macros.h"

namespace acorn {
namespace {

absl::StatusOr<NodeId> LookupNode(absl::string_view name, const Topology& topo) {
  auto n = topo.FindNode(name);
  if (!n) {
    return absl::NotFoundError(absl::StrCat("unknown node '", name, "'"));
  }
  return *n;
}

}  // namespace

FieldSet PropertySpec::Fields() const {
  if (kind == Kind::kCommEquals) return {Field::kComms};
  return {};
}

bool IsPeerOrProviderEdgeIn(EdgeRel rel_v_to_u) {
  return rel_v_to_u == EdgeRel::kProviderToCustomer || rel_v_to_u == EdgeRel::kPeer;
}

bool IsPeerOrProviderEdgeOut(EdgeRel rel_u_to_w) {
  return rel_u_to_w == EdgeRel::kCustomerToProvider || rel_u_to_w == EdgeRel::kPeer;
}

absl::StatusOr<PathPattern> ParsePathPattern(absl::string_view text,
                                             const Topology& topo) {
  PathPattern p;
  text = absl::StripAsciiWhitespace(text);
  if (text.empty()) return p;
  std::vector<absl::string_view> parts = absl::StrSplit(text, ',');
  for (size_t i = 0; i < parts.size(); ++i) {
    absl::string_view part = absl::StripAsciiWhitespace(parts[i]);
    const size_t arrow = part.find("->");
    if (arrow != absl::string_view::npos) {
      if (i != 0) {
        return absl::InvalidArgumentError(
            "only the first path element may be an edge");
      }
      ASSIGN_OR_RETURN(NodeId a, LookupNode(part.substr(0, arrow), topo));
      ASSIGN_OR_RETURN(NodeId b, LookupNode(part.substr(arrow + 2), topo));
      p.leading_edge = Edge{a, b};
      continue;
    }
    ASSIGN_OR_RETURN(NodeId c, LookupNode(part, topo));
    p.nodes.push_back(c);
  }
  return p;
}

std::string PathPatternToString(const PathPattern& p, const Topology& topo) {
  std::vector<std::string> parts;
  if (p.leading_edge) {
    parts.push_back(absl::StrCat(topo.name(p.leading_edge->from), "->",
                                 topo.name(p.leading_edge->to)));
  }
  for (NodeId n : p.nodes) parts.push_back(topo.name(n));
  return absl::StrJoin(parts, ",");
}

absl::StatusOr<PropertySpec> ParseProperty(absl::string_view text,
                                           const Topology& topo) {
  text = absl::StripAsciiWhitespace(text);
  if (text == "notransit") return PropertySpec::NoTransit();
  if (text == "reachall") return PropertySpec::ReachAll();
  const size_t colon = text.find(':');
  if (colon == absl::string_view::npos) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed property '", text, "'"));
  }
  const absl::string_view kind = text.substr(0, colon);
  const absl::string_view arg = text.substr(colon + 1);
  if (kind == "reach") {
    ASSIGN_OR_RETURN(NodeId n, LookupNode(arg, topo));
    return PropertySpec::Reach(n);
  }
  if (kind == "isolate") {
    ASSIGN_OR_RETURN(NodeId n, LookupNode(arg, topo));
    return PropertySpec::Isolation(n);
  }
  const size_t eq = arg.find('=');
  if (eq == absl::string_view::npos) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed property '", text, "'"));
  }
  ASSIGN_OR_RETURN(NodeId n, LookupNode(arg.substr(0, eq), topo));
  const absl::string_view rhs = arg.substr(eq + 1);
  if (kind == "commeq") {
    uint32_t v = 0;
    if (!absl::SimpleAtoi(rhs, &v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad community value '", rhs, "'"));
    }
    return PropertySpec::CommEquals(n, v);
  }
  if (kind == "pathregex") {
    ASSIGN_OR_RETURN(PathPattern p, ParsePathPattern(rhs, topo));
    return PropertySpec::PathRegexHolds(n, std::move(p));
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown property kind '", kind, "'"));
}

std::string PropertyToString(const PropertySpec& p, const Topology& topo) {
  switch (p.kind) {
    case PropertySpec::Kind::kReach:
      return absl::StrCat("reach:", topo.name(p.node));
    case PropertySpec::Kind::kReachAll:
      return "reachall";
    case PropertySpec::Kind::kIsolation:
      return absl::StrCat("isolate:", topo.name(p.node));
    case PropertySpec::Kind::kNoTransit:
      return "notransit";
    case PropertySpec::Kind::kCommEquals:
      return absl::StrCat("commeq:", topo.name(p.node), "=", p.value);
    case PropertySpec::Kind::kPathRegexHolds:
      return absl::StrCat("pathregex:", topo.name(p.node), "=",
                          PathPatternToString(p.pattern, topo));
  }
  return "?";
}

absl::Status ValidateProperty(const PropertySpec& p, const Topology& topo,
                              const PolicyIR& policy) {
  switch (p.kind) {
    case PropertySpec::Kind::kReachAll:
      return absl::OkStatus();
    case PropertySpec::Kind::kNoTransit:
      if (!policy.relationships) {
        return absl::FailedPreconditionError(
            "notransit requires relationship annotations");
      }
      return absl::OkStatus();
    case PropertySpec::Kind::kPathRegexHolds:
      if (p.pattern.leading_edge &&
          !topo.FindEdge(p.pattern.leading_edge->from,
                         p.pattern.leading_edge->to)) {
        return absl::InvalidArgumentError("path pattern edge does not exist");
      }
      for (NodeId n : p.pattern.nodes) {
        if (n >= topo.num_nodes()) {
          return absl::InvalidArgumentError("path pattern node does not exist");
        }
      }
      break;
    default:
      break;
  }
  if (p.node >= topo.num_nodes()) {
    return absl::InvalidArgumentError("property references an unknown node");
  }
  if (p.kind == PropertySpec::Kind::kCommEquals &&
      p.value > policy.schema.CommMax()) {
    return absl::InvalidArgumentError("community value exceeds comm width");
  }
  return absl::OkStatus();
}

}  // namespace acorn
