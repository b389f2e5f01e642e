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
#include "acorn/oracle.h"

#include <algorithm>
#include <string>
#include <vector>

#include "acorn/corpus.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace acorn {
namespace {

using ::acorn::testing::LoadData;
using ::acorn::testing::N;
using ::acorn::testing::ParseInstance;
using ::acorn::testing::Unwrap;

// Source of the edge chosen by `u`, or "none".
std::string Via(const SrpInstance& inst, const Labeling& l, NodeId u) {
  if (l.choice[u] < 0) return "none";
  const EdgeId e = inst.topology.in_edges(u)[l.choice[u]];
  return inst.topology.name(inst.topology.edge(e).from);
}

TEST(OracleTest, FiveRouterConcreteTreeIsUnique) {
  const SrpInstance inst = LoadData("five_router_lp.air", AbstractionLevel::Full());
  auto sols = Unwrap(EnumerateSolutions(inst, AbstractionLevel::Full()));
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(Via(inst, sols[0], N(inst, "R4")), "R3");
  EXPECT_EQ(Via(inst, sols[0], N(inst, "R5")), "R4");
  const std::vector<NodeId> path = FlowPath(sols[0], N(inst, "R5"));
  const std::vector<NodeId> want = {N(inst, "R1"), N(inst, "R3"), N(inst, "R4"),
                                    N(inst, "R5")};
  EXPECT_EQ(path, want);
  EXPECT_EQ(sols[0].routes[N(inst, "R4")]->lp, 200u);
}

TEST(OracleTest, StarAdmitsBothUpstreams) {
  const SrpInstance inst = LoadData("five_router_lp.air");
  auto sols = Unwrap(EnumerateSolutions(inst, AbstractionLevel::Star()));
  ASSERT_EQ(sols.size(), 2u);
  std::vector<std::string> vias;
  for (const Labeling& l : sols) vias.push_back(Via(inst, l, N(inst, "R4")));
  std::sort(vias.begin(), vias.end());
  EXPECT_EQ(vias, (std::vector<std::string>{"R2", "R3"}));
}

TEST(OracleTest, InstabilityNamesTheBetterRoute) {
  const SrpInstance inst = LoadData("five_router_lp.air", AbstractionLevel::Full());
  ChoiceFunction choice(inst.topology.num_nodes(), 0);
  choice[inst.topology.dest()] = -1;
  auto l = PropagateChoices(inst, choice);
  ASSERT_TRUE(l.has_value());
  ASSERT_EQ(Via(inst, *l, N(inst, "R4")), "R2");
  EXPECT_FALSE(FindInstability(inst, AbstractionLevel::Star(), *l).has_value());
  auto bad = FindInstability(inst, AbstractionLevel::Lp(), *l);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->node, N(inst, "R4"));
  ASSERT_TRUE(bad->better.has_value());
  EXPECT_EQ(bad->better->lp, 200u);
}

TEST(OracleTest, PropagationRejectsLoopsAndDrops) {
  const SrpInstance loop = ParseInstance("NODES d a b\nEDGES d->a a->b b->a\nDEST d\n");
  // a picks b (position 1 of in_edges(a)), b picks a.
  ChoiceFunction c = {-1, 1, 0};
  EXPECT_FALSE(PropagateChoices(loop, c).has_value());
  const SrpInstance drop = ParseInstance(
      "NODES d a\nEDGES d->a\nDEST d\nPOLICY d->a:\n  match true => drop\n");
  EXPECT_FALSE(PropagateChoices(drop, {-1, 0}).has_value());
  auto none = PropagateChoices(drop, {-1, -1});
  ASSERT_TRUE(none.has_value());
  EXPECT_FALSE(none->routes[1].has_value());
  EXPECT_EQ(Unwrap(EnumerateSolutions(drop, AbstractionLevel::Full())).size(), 1u);
}

TEST(OracleTest, DestinationOnly) {
  const SrpInstance inst = ParseInstance("NODES d\nDEST d\n");
  auto sols = Unwrap(EnumerateSolutions(inst, AbstractionLevel::Full()));
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_TRUE(sols[0].routes[0].has_value());
  EXPECT_TRUE(PropertyHolds(PropertySpec::ReachAll(), inst, sols[0]));
}

TEST(OracleTest, BoundsAreEnforced) {
  const SrpInstance inst = LoadData("five_router_lp.air");
  OracleOptions small;
  small.max_nodes = 4;
  EXPECT_FALSE(EnumerateSolutions(inst, AbstractionLevel::Star(), small).ok());
  small.max_nodes = 10;
  small.max_choice_functions = 3;
  EXPECT_FALSE(EnumerateSolutions(inst, AbstractionLevel::Star(), small).ok());
}

TEST(OracleTest, PropertiesOnLabelings) {
  const SrpInstance inst = LoadData("five_router_lp.air", AbstractionLevel::Full());
  const Labeling l = Unwrap(EnumerateSolutions(inst, AbstractionLevel::Full()))[0];
  EXPECT_TRUE(PropertyHolds(PropertySpec::Reach(N(inst, "R5")), inst, l));
  EXPECT_FALSE(PropertyHolds(PropertySpec::Isolation(N(inst, "R5")), inst, l));
  EXPECT_FALSE(PropertyHolds(PropertySpec::CommEquals(N(inst, "R5"), 1), inst, l));
  EXPECT_TRUE(PropertyHolds(PropertySpec::CommEquals(N(inst, "R2"), 1), inst, l));
  PathPattern via_r2;
  via_r2.nodes = {N(inst, "R2")};
  EXPECT_FALSE(PropertyHolds(PropertySpec::PathRegexHolds(N(inst, "R5"), via_r2), inst, l));
}

TEST(OracleTest, CorpusOverapproximation) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    CorpusInstance c = Unwrap(GenCorpusInstance(seed));
    OverapproxReport r = Unwrap(CheckOverapprox(c.instance));
    EXPECT_TRUE(r.ok()) << c.name << ": " << (r.ok() ? "" : r.violations[0]);
    for (size_t n : r.level_solutions) EXPECT_GE(n, r.concrete_solutions) << c.name;
  }
}

}  // namespace
}  // namespace acorn
