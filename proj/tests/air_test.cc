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
#include "acorn/air.h"

#include <string>

#include "acorn/benchgen.h"
#include "acorn/corpus.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace acorn {
namespace {

using ::acorn::testing::Unwrap;

constexpr char kSmall[] = R"(# two paths to R1
SCHEMA comm=bitmask tags=c1,c2 lp=100
NODES R1 R2 R3
EDGES R1->R2 R1->R3 R3->R2
DEST R1
REL R1->R2:pc R1->R3:pc R3->R2:pp
FAILED R1->R3
POLICY R1->R3 R3->R2 weight=2:
  match comm_has(c1) => set_lp(200), add_tag(c2)
  match path_has(R1->R3,R2) => drop
  match true => allow
)";

TEST(AirTest, ParsesEveryDirective) {
  AirModel m = Unwrap(ParseAir(kSmall));
  EXPECT_EQ(m.topology.num_nodes(), 3u);
  EXPECT_EQ(m.topology.num_edges(), 3u);
  EXPECT_EQ(m.topology.name(m.topology.dest()), "R1");
  EXPECT_EQ(m.policy.schema.tags.size(), 2u);
  ASSERT_TRUE(m.policy.relationships.has_value());
  EXPECT_EQ((*m.policy.relationships)[2], EdgeRel::kPeer);
  ASSERT_EQ(m.failed.size(), 1u);
  EXPECT_EQ(m.topology.EdgeName(m.failed[0]), "R1->R3");
  const EdgePolicy& p = m.policy.edge_policies[1];
  ASSERT_EQ(p.rules.size(), 3u);
  EXPECT_EQ(p.weight, 2u);
  EXPECT_EQ(p.rules[0].actions.size(), 2u);
  EXPECT_TRUE(p.rules[1].Drops());
  EXPECT_TRUE(m.policy.edge_policies[0].rules.empty());
}

TEST(AirTest, PrintRoundTrips) {
  AirModel m = Unwrap(ParseAir(kSmall));
  const std::string text = PrintAir(m);
  EXPECT_EQ(Unwrap(ParseAir(text)), m);
  EXPECT_EQ(PrintAir(Unwrap(ParseAir(text))), text);
}

TEST(AirTest, RoundTripsGeneratedModels) {
  for (FatTreePolicy policy :
       {FatTreePolicy::kShortestPath, FatTreePolicy::kValleyFree,
        FatTreePolicy::kValleyFreeBuggy, FatTreePolicy::kIsolationRegex}) {
    AirModel m = Unwrap(GenFatTree({4, policy}));
    EXPECT_EQ(Unwrap(ParseAir(PrintAir(m))), m) << FatTreePolicyName(policy);
  }
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    CorpusInstance c = Unwrap(GenCorpusInstance(seed));
    const std::string text = PrintAir(c.instance);
    SrpInstance back = Unwrap(ToInstance(Unwrap(ParseAir(text)), c.instance.level));
    EXPECT_EQ(PrintAir(back), text) << c.name;
    EXPECT_EQ(back.failed, c.instance.failed) << c.name;
  }
}

TEST(AirTest, SyntaxErrorsCarryPosition) {
  auto r = ParseAir("NODES a b\nEDGES a->b\nDEST a\nPOLICY a->b:\n  match bogus() => drop\n");
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.status().message().find("line 5 col"), std::string::npos)
      << r.status();
  r = ParseAir("NODES a b\nEDGES a=>b\nDEST a\n");
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.status().message().find("line 2 col"), std::string::npos)
      << r.status();
}

TEST(AirTest, SemanticErrors) {
  EXPECT_FALSE(ParseAir("NODES a b\nEDGES a->c\nDEST a\n").ok());
  EXPECT_FALSE(ParseAir("NODES a b\nEDGES a->b\n").ok());
  EXPECT_FALSE(ParseAir("NODES a a\nDEST a\n").ok());
  // Tags on a counter schema.
  auto r = ParseAir(
      "SCHEMA comm=counter width=2\nNODES a b\nEDGES a->b\nDEST a\n"
      "POLICY a->b:\n  match true => add_tag(c1)\n");
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.status().message().find("a->b"), std::string::npos) << r.status();
  // Value beyond the counter width.
  EXPECT_FALSE(ParseAir("SCHEMA comm=counter width=2\nNODES a b\nEDGES a->b\n"
                        "DEST a\nPOLICY a->b:\n  match comm_eq(4) => drop\n")
                   .ok());
}

TEST(AirTest, ReadsDataFiles) {
  for (const char* f : {"five_router_lp.air", "five_router_lp_filtered.air",
                        "seven_router_diamond.air"}) {
    SrpInstance inst = testing::LoadData(f);
    EXPECT_EQ(inst.topology.name(inst.topology.dest()), "R1") << f;
  }
  EXPECT_FALSE(ReadAirFile("/nonexistent/file.air").ok());
}

}  // namespace
}  // namespace acorn
