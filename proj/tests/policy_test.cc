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

#include "acorn/policy.h"

#include <vector>

#include "acorn/instance.h"
#include "gtest/gtest.h"

namespace acorn {
namespace {

TEST(PathMatchesTest, OrderedSubsequenceAfterLeadingEdge) {
  const std::vector<NodeId> path = {0, 1, 2, 3};
  EXPECT_TRUE(PathMatches({}, path));
  EXPECT_TRUE(PathMatches({std::nullopt, {1, 3}}, path));
  EXPECT_FALSE(PathMatches({std::nullopt, {3, 1}}, path));
  EXPECT_TRUE(PathMatches({Edge{1, 2}, {3}}, path));
  EXPECT_FALSE(PathMatches({Edge{1, 3}, {}}, path));
  EXPECT_FALSE(PathMatches({Edge{2, 3}, {1}}, path));
}

class TransferTest : public ::testing::Test {
 protected:
  SchemaDecl schema_;
  Attribute base_;
  void SetUp() override {
    schema_.tags = {"t0", "t1"};
    base_.lp = 100;
    base_.path_len = 1;
    base_.comms = 0;
    base_.med = 5;
    base_.router_id = 0;
    base_.cost = 2;
    base_.as_path = std::vector<NodeId>{0};
  }
};

TEST_F(TransferTest, DefaultPolicyUpdatesPathFields) {
  EdgePolicy p;
  p.weight = 3;
  Route r = ApplyTransfer(schema_, p, {1, 2}, base_);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->lp, 100u);
  EXPECT_EQ(r->path_len, 2u);
  EXPECT_EQ(r->med, 0u);
  EXPECT_EQ(r->router_id, 1u);
  EXPECT_EQ(r->cost, 5u);
  EXPECT_EQ(*r->as_path, (std::vector<NodeId>{1, 0}));
}

TEST_F(TransferTest, FirstMatchWins) {
  EdgePolicy p;
  p.rules.push_back({{Match::Kind::kCommHasTag, 0, {}}, {{Action::Kind::kDrop, 0}}});
  p.rules.push_back({{Match::Kind::kAlways, 0, {}},
                     {{Action::Kind::kAddTag, 0}, {Action::Kind::kSetLp, 200}}});
  Route r = ApplyTransfer(schema_, p, {1, 2}, base_);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->comms, 1u);
  EXPECT_EQ(r->lp, 200u);
  EXPECT_FALSE(ApplyTransfer(schema_, p, {1, 2}, *r));
}

TEST_F(TransferTest, CounterIncrementSaturates) {
  SchemaDecl counter;
  counter.comm_mode = CommMode::kCounter;
  counter.counter_width = 2;
  EdgePolicy p;
  p.rules.push_back({{}, {{Action::Kind::kIncrComm, 2}}});
  Attribute a = base_;
  a.comms = 2;
  Route r = ApplyTransfer(counter, p, {1, 2}, a);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->comms, 3u);
}

TEST_F(TransferTest, PathGuardSeesSender) {
  EdgePolicy p;
  p.rules.push_back({{Match::Kind::kPathContains, 0, {std::nullopt, {1}}},
                     {{Action::Kind::kDrop, 0}}});
  EXPECT_FALSE(ApplyTransfer(schema_, p, {1, 2}, base_));
  EXPECT_TRUE(ApplyTransfer(schema_, p, {3, 2}, base_));
}

TEST(ValidatePolicyTest, RejectsBadRules) {
  auto topo = Topology::Create({"a", "b"}, {{0, 1}}, 0);
  ASSERT_TRUE(topo.ok());
  PolicyIR ir;
  ir.schema.tags = {"t"};
  ir.edge_policies.resize(1);
  EXPECT_TRUE(ValidatePolicy(*topo, ir).ok());

  PolicyIR bad_tag = ir;
  bad_tag.edge_policies[0].rules.push_back({{Match::Kind::kCommHasTag, 3, {}}, {}});
  EXPECT_FALSE(ValidatePolicy(*topo, bad_tag).ok());

  PolicyIR drop_mix = ir;
  drop_mix.edge_policies[0].rules.push_back(
      {{}, {{Action::Kind::kDrop, 0}, {Action::Kind::kSetLp, 1}}});
  EXPECT_FALSE(ValidatePolicy(*topo, drop_mix).ok());

  PolicyIR counter = ir;
  counter.schema.comm_mode = CommMode::kCounter;
  counter.edge_policies[0].rules.push_back({{}, {{Action::Kind::kAddTag, 0}}});
  EXPECT_FALSE(ValidatePolicy(*topo, counter).ok());

  PolicyIR missing = ir;
  missing.edge_policies.clear();
  EXPECT_FALSE(ValidatePolicy(*topo, missing).ok());
}

TEST(InstanceTest, FailedEdgeTransfersNoRoute) {
  auto topo = Topology::Create({"a", "b"}, {{0, 1}}, 0);
  ASSERT_TRUE(topo.ok());
  PolicyIR ir;
  ir.edge_policies.resize(1);
  auto inst = MakeInstance(*topo, ir);
  ASSERT_TRUE(inst.ok()) << inst.status();
  EXPECT_TRUE(inst->Transfer(0, inst->init));
  inst->failed[0] = true;
  EXPECT_FALSE(inst->Transfer(0, inst->init));
  const SrpInstance dropped = WithFailuresAsDropRules(*inst);
  EXPECT_TRUE(dropped.FailedEdges().empty());
  EXPECT_FALSE(dropped.Transfer(0, dropped.init));
}

}  // namespace
}  // namespace acorn
