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

#include "acorn/topology.h"

#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace acorn {
namespace {

uint64_t PairKey(NodeId from, NodeId to) {
  return (static_cast<uint64_t>(from) << 32) | to;
}

}  // namespace

bool IsValidNodeName(absl::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!alpha(name[0])) return false;
  for (char c : name) {
    if (!alpha(c) && !(c >= '0' && c <= '9') && c != '.') return false;
  }
  return true;
}

absl::StatusOr<Topology> Topology::Create(std::vector<std::string> names,
                                          std::vector<Edge> edges,
                                          NodeId dest) {
  Topology t;
  if (names.empty()) {
    return absl::InvalidArgumentError("topology has no nodes");
  }
  for (NodeId u = 0; u < names.size(); ++u) {
    if (names[u].empty()) {
      return absl::InvalidArgumentError(absl::StrCat("node ", u, " has no name"));
    }
    if (!t.by_name_.emplace(names[u], u).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate node name '", names[u], "'"));
    }
  }
  if (dest >= names.size()) {
    return absl::InvalidArgumentError("destination is not a node");
  }
  t.in_.resize(names.size());
  t.out_.resize(names.size());
  for (EdgeId e = 0; e < edges.size(); ++e) {
    const Edge& edge = edges[e];
    if (edge.from >= names.size() || edge.to >= names.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", e, " references an unknown node"));
    }
    if (edge.from == edge.to) {
      return absl::InvalidArgumentError(
          absl::StrCat("self-loop on node '", names[edge.from], "'"));
    }
    if (!t.by_pair_.emplace(PairKey(edge.from, edge.to), e).second) {
      return absl::InvalidArgumentError(absl::StrCat(
          "duplicate edge ", names[edge.from], "->", names[edge.to]));
    }
    t.in_[edge.to].push_back(e);
    t.out_[edge.from].push_back(e);
  }
  t.names_ = std::move(names);
  t.edges_ = std::move(edges);
  t.dest_ = dest;
  return t;
}

std::optional<NodeId> Topology::FindNode(absl::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Topology::FindEdge(NodeId from, NodeId to) const {
  auto it = by_pair_.find(PairKey(from, to));
  if (it == by_pair_.end()) return std::nullopt;
  return it->second;
}

std::string Topology::EdgeName(EdgeId e) const {
  return absl::StrCat(names_[edges_[e].from], "->", names_[edges_[e].to]);
}

}  // namespace acorn
