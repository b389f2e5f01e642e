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

#ifndef ACORN_PROPERTY_H_
#define ACORN_PROPERTY_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "acorn/attribute.h"
#include "acorn/policy.h"
#include "acorn/topology.h"

namespace acorn {

struct PropertySpec {
  enum class Kind : uint8_t {
    kReach,           // node has a route to the destination.
    kReachAll,        // every node has a route.
    kIsolation,       // node never has a route.
    kNoTransit,       // no node carries routes between peers/providers.
    kCommEquals,      // node's community is never `value`.
    kPathRegexHolds,  // node's route always matches `pattern`.
  };

  Kind kind = Kind::kReach;
  NodeId node = 0;
  uint32_t value = 0;
  PathPattern pattern;

  static PropertySpec Reach(NodeId n) { return {Kind::kReach, n, 0, {}}; }
  static PropertySpec ReachAll() { return {Kind::kReachAll, 0, 0, {}}; }
  static PropertySpec Isolation(NodeId n) { return {Kind::kIsolation, n, 0, {}}; }
  static PropertySpec NoTransit() { return {Kind::kNoTransit, 0, 0, {}}; }
  static PropertySpec CommEquals(NodeId n, uint32_t v) {
    return {Kind::kCommEquals, n, v, {}};
  }
  static PropertySpec PathRegexHolds(NodeId n, PathPattern p) {
    return {Kind::kPathRegexHolds, n, 0, std::move(p)};
  }

  // Route fields the property reads.
  FieldSet Fields() const;

  bool operator==(const PropertySpec&) const = default;
};

// Mini-syntax: reach:NODE, reachall, isolate:NODE, notransit,
// commeq:NODE=V, pathregex:NODE=a->b,c,d.
absl::StatusOr<PropertySpec> ParseProperty(absl::string_view text,
                                           const Topology& topo);
std::string PropertyToString(const PropertySpec& p, const Topology& topo);

// Rejects unknown nodes and notransit without relationship annotations.
absl::Status ValidateProperty(const PropertySpec& p, const Topology& topo,
                              const PolicyIR& policy);

// Parses "a->b,c,d" (leading edge optional) into a pattern.
absl::StatusOr<PathPattern> ParsePathPattern(absl::string_view text,
                                             const Topology& topo);
std::string PathPatternToString(const PathPattern& p, const Topology& topo);

// Neighbor `v` of `u` is one of u's peers or providers according to the
// relationship of edge (v, u) or (u, v).
bool IsPeerOrProviderEdgeIn(EdgeRel rel_v_to_u);
bool IsPeerOrProviderEdgeOut(EdgeRel rel_u_to_w);

}  // namespace acorn

#endif  // ACORN_PROPERTY_H_
