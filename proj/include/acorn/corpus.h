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

#ifndef ACORN_CORPUS_H_
#define ACORN_CORPUS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "acorn/instance.h"
#include "acorn/property.h"

namespace acorn {

// Seeded random SRPs small enough for the exhaustive oracle.
struct CorpusOptions {
  size_t min_nodes = 2;
  size_t max_nodes = 6;
  double edge_probability = 0.3;  // Extra edges beyond the spanning tree.
  double counter_probability = 0.2;
  double ospf_probability = 0.15;
  double relationship_probability = 0.4;
  double failure_probability = 0.3;
  size_t max_rules_per_edge = 2;
  // Limits the product of (in-degree + 1) over non-destination nodes.
  uint64_t max_choice_functions = 20'000;
};

struct CorpusInstance {
  std::string name;
  uint64_t seed = 0;
  SrpInstance instance;  // Analyzed at the protocol's least precise level.
  std::vector<PropertySpec> properties;
};

// Deterministic in `seed`.
absl::StatusOr<CorpusInstance> GenCorpusInstance(uint64_t seed,
                                                 const CorpusOptions& options = {});

}  // namespace acorn

#endif  // ACORN_CORPUS_H_
