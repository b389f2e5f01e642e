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

#ifndef ACORN_ENCODER_H_
#define ACORN_ENCODER_H_

#include <array>
#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "acorn/abstraction.h"
#include "acorn/attribute.h"
#include "acorn/formula.h"
#include "acorn/instance.h"
#include "acorn/policy.h"

namespace acorn {

// kStandard: route availability through rank counters, plain QF_BV.
// kGraph: route availability and path patterns through reaches atoms, which
// are lowered to QF_BV at emission time.
enum class BackendKind : uint8_t { kStandard, kGraph };

absl::string_view BackendName(BackendKind b);
absl::StatusOr<BackendKind> ParseBackend(absl::string_view text);

// Loop-freedom constraint on the standard backend. kSuccessor asserts
// re_vu -> rank_u = rank_v + 1; kOrdered asserts re_vu -> rank_v < rank_u.
// Both admit exactly the loop-free routing forests.
enum class RankMode { kOrdered, kSuccessor };

absl::StatusOr<RankMode> ParseRankMode(absl::string_view text);

struct EncoderOptions {
  BackendKind backend = BackendKind::kStandard;
  RankMode rank = RankMode::kOrdered;
  // Replace routeDropped variables whose definition folds to a constant by
  // that constant.
  bool inline_constant_drops = true;
};

// Terms for every encoding variable, indexed by NodeId or EdgeId. Entries
// that fold to constants (edges into the destination, destination
// attributes) hold constant terms; unused entries are null.
struct VarTable {
  std::vector<Term> re;
  std::vector<Term> nchoice;  // Null at the destination.
  std::vector<uint32_t> nchoice_width;
  std::vector<Term> has_route;
  std::vector<Term> dropped;
  std::vector<Term> rank;  // Standard backend only.
  std::array<std::vector<Term>, kNumFields> attr;
  std::array<std::vector<Term>, kNumFields> trans;  // Value sent over an edge.
  std::vector<Term> valid;  // nValid; selection levels only.
  std::vector<std::vector<Term>> best;  // [step][node].
  std::vector<SelectionStep> steps;

  Term attr_of(Field f, NodeId u) const { return attr[static_cast<int>(f)][u]; }
};

// Neighbor ID of the edge entering `u` at position i of in_edges(u) is i;
// None_u is deg_in(u).
uint32_t NoneId(const Topology& topo, NodeId u);
uint32_t NChoiceWidth(const Topology& topo, NodeId u);
uint32_t RankWidth(size_t num_nodes);

struct Encoding {
  ConstraintSystem system;
  VarTable vars;
  AttributeSchema schema;
  AbstractionLevel level;
  BackendKind backend = BackendKind::kStandard;
};

// Routing choice, availability, transfer and filtering constraints plus the
// selection constraints of a non-full level. The tracked fields are
// `inst.schema.active`, which must include the level's compared fields.
absl::StatusOr<Encoding> EncodeAbstract(const SrpInstance& inst,
                                        const EncoderOptions& options = {});

// The abstract constraints plus best-route selection over every step of the
// full decision process.
absl::StatusOr<Encoding> EncodeConcrete(const SrpInstance& inst,
                                        const EncoderOptions& options = {});

// EncodeAbstract or EncodeConcrete according to inst.level.
absl::StatusOr<Encoding> Encode(const SrpInstance& inst,
                                const EncoderOptions& options = {});

// Route-availability block. Declares rank variables on the standard backend
// and returns the assertions without adding them.
std::vector<Term> EncodeHasRoute(const Topology& topo, VarTable& vars,
                                 ConstraintSystem& system, BackendKind backend,
                                 RankMode rank = RankMode::kOrdered);

// Holds iff the path from the destination to `anchor` in the routing tree
// matches `pattern`. Requires the graph backend.
absl::StatusOr<Term> EncodePathRegex(const PathPattern& pattern, NodeId anchor,
                                     const Topology& topo, const VarTable& vars,
                                     BackendKind backend);

// Variable names.
std::string ReName(NodeId v, NodeId u);
std::string NChoiceName(NodeId u);
std::string HasRouteName(NodeId u);
std::string RankName(NodeId u);
std::string AttrName(Field f, NodeId u);

}  // namespace acorn

#endif  // ACORN_ENCODER_H_
