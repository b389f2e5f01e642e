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

#ifndef ACORN_GML_H_
#define ACORN_GML_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "acorn/air.h"
#include "acorn/policy.h"

namespace acorn {

// Undirected graph as read from a GML file. Each link keeps the relationship
// of its source to its target when the edge carried a rel attribute.
struct GmlGraph {
  struct Link {
    size_t source = 0;  // Index into labels.
    size_t target = 0;
    std::optional<EdgeRel> rel;
  };

  std::vector<std::string> labels;  // Sanitized, unique.
  std::vector<Link> links;
  std::optional<size_t> dest;  // From a graph-level "dest <node id>" key.
};

// Accepts generic GML; only graph/node/edge blocks and the id, label,
// source, target, rel and dest keys are interpreted. Duplicate node ids and
// self-loops are rejected. Parallel links with the same relationship are
// merged.
absl::StatusOr<GmlGraph> ParseGml(absl::string_view text);

// Materializes both directions of every link. When every link is labeled the
// Gao-Rexford policy is instantiated; when none is, all edges keep the
// default policy. `dest` overrides the file's destination by label.
absl::StatusOr<AirModel> IngestGml(absl::string_view text,
                                   std::optional<std::string> dest = {});

std::string WriteGml(const GmlGraph& graph);

}  // namespace acorn

#endif  // ACORN_GML_H_
