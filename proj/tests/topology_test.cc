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

#include "gtest/gtest.h"

namespace acorn {
namespace {

TEST(TopologyTest, InEdgesKeepDeclarationOrder) {
  auto t = Topology::Create({"a", "b", "c"}, {{0, 2}, {1, 2}, {0, 1}}, 0);
  ASSERT_TRUE(t.ok()) << t.status();
  ASSERT_EQ(t->in_edges(2).size(), 2u);
  EXPECT_EQ(t->edge(t->in_edges(2)[0]).from, 0u);
  EXPECT_EQ(t->edge(t->in_edges(2)[1]).from, 1u);
  EXPECT_EQ(t->out_edges(0).size(), 2u);
  EXPECT_EQ(t->FindEdge(1, 2), 1u);
  EXPECT_FALSE(t->FindEdge(2, 1).has_value());
  EXPECT_EQ(t->EdgeName(2), "a->b");
  EXPECT_EQ(t->FindNode("c"), 2u);
  EXPECT_FALSE(t->FindNode("d").has_value());
}

TEST(TopologyTest, RejectsMalformedGraphs) {
  EXPECT_FALSE(Topology::Create({"a", "a"}, {}, 0).ok());
  EXPECT_FALSE(Topology::Create({"a", ""}, {}, 0).ok());
  EXPECT_FALSE(Topology::Create({"a", "b"}, {{0, 0}}, 0).ok());
  EXPECT_FALSE(Topology::Create({"a", "b"}, {{0, 1}, {0, 1}}, 0).ok());
  EXPECT_FALSE(Topology::Create({"a", "b"}, {{0, 2}}, 0).ok());
  EXPECT_FALSE(Topology::Create({"a", "b"}, {}, 5).ok());
}

TEST(TopologyTest, DestOnly) {
  auto t = Topology::Create({"d"}, {}, 0);
  ASSERT_TRUE(t.ok());
  EXPECT_EQ(t->num_nodes(), 1u);
  EXPECT_EQ(t->num_edges(), 0u);
}

}  // namespace
}  // namespace acorn
