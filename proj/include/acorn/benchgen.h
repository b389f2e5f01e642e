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

#ifndef ACORN_BENCHGEN_H_
#define ACORN_BENCHGEN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "acorn/air.h"
#include "acorn/gml.h"
#include "acorn/policy.h"
#include "acorn/topology.h"

namespace acorn {

enum class FatTreePolicy : uint8_t {
  kShortestPath,
  kValleyFree,
  kValleyFreeNoFilter,  // Valley-free counter without the Aggr import drop.
  kValleyFreeBuggy,
  kIsolationRegex,
};

absl::string_view FatTreePolicyName(FatTreePolicy p);
// shortest-path, valley-free, valley-free-nofilter, buggy, isolation.
absl::StatusOr<FatTreePolicy> ParseFatTreePolicy(absl::string_view text);

struct FatTreeParams {
  int k = 4;  // Even, at least 4.
  FatTreePolicy policy = FatTreePolicy::kShortestPath;
};

// Node names: ToR "t<pod>_<i>", Aggr "a<pod>_<j>", core "c<idx>", and "ext"
// for the isolation variant. Aggr j of every pod links to cores
// j*k/2 .. j*k/2 + k/2 - 1. The destination is t0_0.
std::string FatTreeTorName(int pod, int index);
std::string FatTreeAggrName(int pod, int index);
std::string FatTreeCoreName(int index);
inline constexpr absl::string_view kFatTreeExtName = "ext";
size_t FatTreeNodeCount(int k);  // 5k^2/4, without the external router.

// Counter community c (width 2, 0 at the destination):
//   valley-free: every Aggr export increments c; every Aggr import drops
//     routes whose sender has c >= 2.
//   buggy: additionally, last-pod ToRs drop routes whose sender has c != 0.
//   isolation: valley-free plus an external router linked to every core
//     that drops routes whose path contains a pod-0 ToR.
absl::StatusOr<AirModel> GenFatTree(const FatTreeParams& params);
absl::StatusOr<std::string> GenFatTreeAir(const FatTreeParams& params);

// Community tags used by the Gao-Rexford policy.
inline constexpr absl::string_view kTagCustomer = "cust";
inline constexpr absl::string_view kTagPeer = "peer";
inline constexpr absl::string_view kTagProvider = "prov";
inline constexpr uint32_t kLpCustomer = 200;
inline constexpr uint32_t kLpPeer = 150;
inline constexpr uint32_t kLpProvider = 100;

// Import at the receiver tags the route with the sender's relationship and
// sets lp from it (customer > peer > provider). Export towards a peer or
// provider drops routes tagged peer or provider. Intra edges keep the
// default policy. `rels` is indexed by EdgeId.
absl::StatusOr<PolicyIR> GaoRexfordPolicy(const Topology& topo,
                                          const std::vector<EdgeRel>& rels);
absl::StatusOr<AirModel> GenGaoRexford(const Topology& topo,
                                       const std::vector<EdgeRel>& rels);

// Size of an ISP backbone benchmark.
struct WanShape {
  std::string name;
  size_t nodes = 0;
  size_t links = 0;
};

// The ten backbone sizes used for the WAN benchmarks, 22 to 79 nodes.
const std::vector<WanShape>& ZooShapes();

// Connected random graph of the given shape: a random spanning tree plus
// extra links. Relationships follow BFS depth from node 0 (the destination):
// the endpoint nearer the destination is the provider, equal depths peer.
GmlGraph GenZooLikeGraph(const WanShape& shape, uint64_t seed);

// Tiered AS graph: a clique of tier-1 peers, transit ASes buying from one or
// two providers with occasional peering, and stub customers. The
// destination is the last stub.
GmlGraph GenAsGraph(size_t nodes, uint64_t seed);

}  // namespace acorn

#endif  // ACORN_BENCHGEN_H_
