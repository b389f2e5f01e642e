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

#ifndef ACORN_TOPOLOGY_H_
#define ACORN_TOPOLOGY_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace acorn {

using NodeId = uint32_t;
using EdgeId = uint32_t;

// A directed edge (from, to): routes are announced by `from` to `to`.
// Traffic consequently flows in the opposite direction.
struct Edge {
  NodeId from = 0;
  NodeId to = 0;

  auto operator<=>(const Edge&) const = default;
};

// G = (V, E, d). Nodes are dense integers; every node has a display name.
// Immutable after construction.
class Topology {
 public:
  // Validates: names unique and non-empty, no self-loops, no duplicate edges,
  // endpoints and dest in range.
  static absl::StatusOr<Topology> Create(std::vector<std::string> names,
                                         std::vector<Edge> edges, NodeId dest);

  Topology() = default;

  size_t num_nodes() const { return names_.size(); }
  size_t num_edges() const { return edges_.size(); }
  NodeId dest() const { return dest_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::string& name(NodeId u) const { return names_[u]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<NodeId> FindNode(absl::string_view name) const;
  std::optional<EdgeId> FindEdge(NodeId from, NodeId to) const;

  // Edges entering `u`, in declaration order. The position of an edge in
  // this list is u's neighbor ID for the edge's source.
  std::span<const EdgeId> in_edges(NodeId u) const { return in_[u]; }
  std::span<const EdgeId> out_edges(NodeId u) const { return out_[u]; }

  // "from->to" with display names.
  std::string EdgeName(EdgeId e) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  NodeId dest_ = 0;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<std::vector<EdgeId>> out_;
  absl::flat_hash_map<std::string, NodeId> by_name_;
  absl::flat_hash_map<uint64_t, EdgeId> by_pair_;
};

// True for names accepted by the text formats: [A-Za-z_][A-Za-z0-9_.]*.
bool IsValidNodeName(absl::string_view name);

}  // namespace acorn

#endif  // ACORN_TOPOLOGY_H_
