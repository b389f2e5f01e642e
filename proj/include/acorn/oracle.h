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

#ifndef ACORN_ORACLE_H_
#define ACORN_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "acorn/abstraction.h"
#include "acorn/attribute.h"
#include "acorn/instance.h"
#include "acorn/property.h"

namespace acorn {

// Per node: position in in_edges(u) of the chosen neighbor, or -1 for None.
// The destination always holds -1.
using ChoiceFunction = std::vector<int32_t>;

// A choice function together with the concrete routes it induces.
struct Labeling {
  ChoiceFunction choice;
  std::vector<Route> routes;  // Full concrete attributes; d holds a_d.

  bool operator==(const Labeling& o) const { return choice == o.choice; }
  bool operator<(const Labeling& o) const { return choice < o.choice; }
};

// Propagates routes from the destination along the chosen edges. Returns
// nullopt when the choices form a loop, hang off a node without a route, or
// use an edge whose transfer yields NoRoute.
std::optional<Labeling> PropagateChoices(const SrpInstance& inst,
                                         const ChoiceFunction& choice);

// Concrete routes u receives from its neighbors in `routes`: the non-NoRoute
// transfers, with the in-edge position they arrive on.
std::vector<std::pair<uint32_t, Attribute>> AvailableRoutes(
    const SrpInstance& inst, const std::vector<Route>& routes, NodeId u);

struct Instability {
  NodeId node = 0;
  std::string reason;
  Route better;  // A strictly preferred available route, if any.
};

// First node whose choice is not locally stable under `level`: a None node
// with an available route, or a chosen route with a strictly better one.
std::optional<Instability> FindInstability(const SrpInstance& inst,
                                           const AbstractionLevel& level,
                                           const Labeling& labeling);

struct OracleOptions {
  size_t max_nodes = 10;
  uint64_t max_choice_functions = 50'000'000;
};

// All stable labelings at `level`, sorted by choice function.
absl::StatusOr<std::vector<Labeling>> EnumerateSolutions(
    const SrpInstance& inst, const AbstractionLevel& level,
    const OracleOptions& options = {});

// One enumeration pass shared by several levels; result i belongs to
// levels[i].
absl::StatusOr<std::vector<std::vector<Labeling>>> EnumerateSolutionsAt(
    const SrpInstance& inst, const std::vector<AbstractionLevel>& levels,
    const OracleOptions& options = {});

struct OverapproxReport {
  size_t concrete_solutions = 0;
  std::vector<size_t> level_solutions;  // Aligned with the protocol hierarchy.
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks that every full-level solution is a solution at every coarser level
// of the instance's protocol hierarchy.
absl::StatusOr<OverapproxReport> CheckOverapprox(const SrpInstance& inst,
                                                 const OracleOptions& options = {});

bool PropertyHolds(const PropertySpec& p, const SrpInstance& inst,
                   const Labeling& labeling);

// Flow path from the destination to `u` under `labeling`.
std::vector<NodeId> FlowPath(const Labeling& labeling, NodeId u);

}  // namespace acorn

#endif  // ACORN_ORACLE_H_
