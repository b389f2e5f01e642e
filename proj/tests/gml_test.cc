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
#include "acorn/gml.h"

#include <string>

#include "acorn/benchgen.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace acorn {
namespace {

using ::acorn::testing::Unwrap;

constexpr char kTriangle[] = R"(graph [
  directed 0
  dest 0
  node [ id 0 label "Core A" ]
  node [ id 1 label "B" ]
  node [ id 2 label "C" ]
  edge [ source 0 target 1 rel "pc" ]
  edge [ source 0 target 2 rel "pc" ]
  edge [ source 1 target 2 rel "pp" ]
]
)";

TEST(GmlTest, ParsesNodesAndLinks) {
  GmlGraph g = Unwrap(ParseGml(kTriangle));
  ASSERT_EQ(g.labels.size(), 3u);
  EXPECT_EQ(g.labels[0], "Core_A");
  ASSERT_EQ(g.links.size(), 3u);
  EXPECT_EQ(g.links[2].rel, EdgeRel::kPeer);
  EXPECT_EQ(g.dest, 0u);
}

TEST(GmlTest, RejectsSelfLoopsAndDuplicateIds) {
  EXPECT_FALSE(ParseGml("graph [ node [ id 0 ] edge [ source 0 target 0 ] ]").ok());
  EXPECT_FALSE(ParseGml("graph [ node [ id 0 ] node [ id 0 ] ]").ok());
  EXPECT_FALSE(ParseGml("graph [ node [ id 0 ] edge [ source 0 target 7 ] ]").ok());
  EXPECT_FALSE(ParseGml("graph [ node [ id 0 ").ok());
}

TEST(GmlTest, MergesAgreeingParallelLinks) {
  GmlGraph g = Unwrap(ParseGml(
      "graph [ node [ id 0 ] node [ id 1 ] edge [ source 0 target 1 rel \"pc\" ]"
      " edge [ source 1 target 0 rel \"cp\" ] ]"));
  EXPECT_EQ(g.links.size(), 1u);
  EXPECT_FALSE(ParseGml(
                   "graph [ node [ id 0 ] node [ id 1 ] edge [ source 0 target 1 rel \"pc\" ]"
                   " edge [ source 0 target 1 rel \"pp\" ] ]")
                   .ok());
}

TEST(GmlTest, IngestInstantiatesGaoRexford) {
  AirModel m = Unwrap(IngestGml(kTriangle));
  EXPECT_EQ(m.topology.num_edges(), 6u);
  ASSERT_TRUE(m.policy.relationships.has_value());
  EXPECT_EQ(m.topology.name(m.topology.dest()), "Core_A");
  const EdgeId b_to_c = *m.topology.FindEdge(1, 2);
  EXPECT_EQ((*m.policy.relationships)[b_to_c], EdgeRel::kPeer);
  EXPECT_FALSE(m.policy.edge_policies[b_to_c].rules.empty());

  AirModel other = Unwrap(IngestGml(kTriangle, std::string("C")));
  EXPECT_EQ(other.topology.name(other.topology.dest()), "C");
  EXPECT_FALSE(IngestGml(kTriangle, std::string("nope")).ok());
}

TEST(GmlTest, UnlabeledLinksKeepDefaultPolicy) {
  AirModel m = Unwrap(IngestGml(
      "graph [ node [ id 0 ] node [ id 1 ] edge [ source 0 target 1 ] ]"));
  EXPECT_FALSE(m.policy.relationships.has_value());
  for (const EdgePolicy& p : m.policy.edge_policies) EXPECT_TRUE(p.rules.empty());
}

TEST(GmlTest, WriteRoundTrips) {
  for (const WanShape& shape : ZooShapes()) {
    GmlGraph g = GenZooLikeGraph(shape, 7);
    GmlGraph back = Unwrap(ParseGml(WriteGml(g)));
    EXPECT_EQ(back.labels, g.labels) << shape.name;
    ASSERT_EQ(back.links.size(), g.links.size()) << shape.name;
    for (size_t i = 0; i < g.links.size(); ++i) {
      EXPECT_EQ(back.links[i].source, g.links[i].source);
      EXPECT_EQ(back.links[i].target, g.links[i].target);
      EXPECT_EQ(back.links[i].rel, g.links[i].rel);
    }
  }
}

}  // namespace
}  // namespace acorn
