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
#include "acorn/benchgen.h"

#include <queue>
#include <set>
#include <vector>

#include "acorn/property.h"
#include "acorn/verifier.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace acorn {
namespace {

using ::acorn::testing::N;
using ::acorn::testing::TestVerifyConfig;
using ::acorn::testing::Unwrap;

TEST(FatTreeTest, Sizes) {
  EXPECT_EQ(FatTreeNodeCount(4), 20u);
  EXPECT_EQ(FatTreeNodeCount(10), 125u);
  for (int k : {4, 6, 10}) {
    AirModel m = Unwrap(GenFatTree({k, FatTreePolicy::kShortestPath}));
    EXPECT_EQ(m.topology.num_nodes(), FatTreeNodeCount(k));
    // k^3/4 ToR-Aggr plus Aggr-core links, both directions.
    EXPECT_EQ(m.topology.num_edges(), static_cast<size_t>(k * k * k));
    EXPECT_EQ(m.topology.name(m.topology.dest()), FatTreeTorName(0, 0));
  }
  AirModel iso = Unwrap(GenFatTree({4, FatTreePolicy::kIsolationRegex}));
  EXPECT_EQ(iso.topology.num_nodes(), FatTreeNodeCount(4) + 1);
  EXPECT_TRUE(iso.topology.FindNode(kFatTreeExtName).has_value());
  EXPECT_FALSE(GenFatTree({5, FatTreePolicy::kShortestPath}).ok());
  EXPECT_FALSE(GenFatTree({2, FatTreePolicy::kShortestPath}).ok());
}

TEST(FatTreeTest, PolicyNames) {
  for (FatTreePolicy p :
       {FatTreePolicy::kShortestPath, FatTreePolicy::kValleyFree,
        FatTreePolicy::kValleyFreeNoFilter, FatTreePolicy::kValleyFreeBuggy,
        FatTreePolicy::kIsolationRegex}) {
    EXPECT_EQ(Unwrap(ParseFatTreePolicy(FatTreePolicyName(p))), p);
  }
  EXPECT_FALSE(ParseFatTreePolicy("ecmp").ok());
}

TEST(FatTreeTest, ValleyFreeCounterAtTheLastTor) {
  const SrpInstance inst =
      Unwrap(ToInstance(Unwrap(GenFatTree({4, FatTreePolicy::kValleyFree}))));
  const NodeId tor = N(inst, FatTreeTorName(3, 1));
  Verdict two = Unwrap(Verify(inst, PropertySpec::CommEquals(tor, 2), TestVerifyConfig()));
  EXPECT_EQ(two.kind, Verdict::Kind::kViolated);
  Verdict three =
      Unwrap(Verify(inst, PropertySpec::CommEquals(tor, 3), TestVerifyConfig()));
  EXPECT_EQ(three.kind, Verdict::Kind::kVerified);
  Verdict reach = Unwrap(Verify(inst, PropertySpec::Reach(tor), TestVerifyConfig()));
  EXPECT_EQ(reach.kind, Verdict::Kind::kVerified);
}

bool Connected(const GmlGraph& g) {
  std::vector<std::vector<size_t>> adj(g.labels.size());
  for (const GmlGraph::Link& l : g.links) {
    adj[l.source].push_back(l.target);
    adj[l.target].push_back(l.source);
  }
  std::vector<bool> seen(g.labels.size(), false);
  std::queue<size_t> q;
  q.push(0);
  seen[0] = true;
  size_t count = 1;
  while (!q.empty()) {
    const size_t u = q.front();
    q.pop();
    for (size_t v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        q.push(v);
      }
    }
  }
  return count == g.labels.size();
}

TEST(ZooTest, ShapesAreRespected) {
  ASSERT_EQ(ZooShapes().size(), 10u);
  for (const WanShape& shape : ZooShapes()) {
    GmlGraph g = GenZooLikeGraph(shape, 1);
    EXPECT_EQ(g.labels.size(), shape.nodes) << shape.name;
    EXPECT_EQ(g.links.size(), shape.links) << shape.name;
    EXPECT_TRUE(Connected(g)) << shape.name;
    std::set<std::pair<size_t, size_t>> pairs;
    for (const GmlGraph::Link& l : g.links) {
      EXPECT_NE(l.source, l.target);
      EXPECT_TRUE(l.rel.has_value());
      EXPECT_TRUE(pairs.insert(std::minmax(l.source, l.target)).second) << shape.name;
    }
    EXPECT_EQ(GenZooLikeGraph(shape, 1).links.size(), g.links.size());
  }
}

TEST(AsGraphTest, ConnectedAndLabeled) {
  for (size_t n : {4u, 20u, 60u}) {
    GmlGraph g = GenAsGraph(n, 3);
    EXPECT_EQ(g.labels.size(), n);
    EXPECT_TRUE(Connected(g));
    ASSERT_TRUE(g.dest.has_value());
    AirModel m = Unwrap(IngestGml(WriteGml(g)));
    EXPECT_TRUE(m.policy.relationships.has_value());
  }
}

}  // namespace
}  // namespace acorn
