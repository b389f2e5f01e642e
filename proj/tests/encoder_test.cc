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
#include "acorn/encoder.h"

#include <algorithm>
#include <vector>

#include "acorn/corpus.h"
#include "acorn/oracle.h"
#include "acorn/smtlib.h"
#include "acorn/solver.h"
#include "acorn/verifier.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace acorn {
namespace {

using ::acorn::testing::ParseInstance;
using ::acorn::testing::TestSolver;
using ::acorn::testing::Unwrap;

TEST(EncoderTest, ChoiceAndRankWidths) {
  Topology t = Unwrap(Topology::Create({"d", "a", "b", "c"},
                                       {{0, 3}, {1, 3}, {2, 3}, {0, 1}}, 0));
  EXPECT_EQ(NoneId(t, 3), 3u);
  EXPECT_EQ(NChoiceWidth(t, 3), 2u);
  EXPECT_EQ(NoneId(t, 1), 1u);
  EXPECT_EQ(NChoiceWidth(t, 1), 1u);
  EXPECT_EQ(NChoiceWidth(t, 2), 1u);
  EXPECT_EQ(RankWidth(4), 3u);
  EXPECT_EQ(RankWidth(5), 4u);
  EXPECT_EQ(RankWidth(1), 1u);
}

TEST(EncoderTest, ConstantDropsAreInlined) {
  SrpInstance inst = ParseInstance(
      "NODES d a b\nEDGES d->a a->b\nDEST d\nPOLICY a->b:\n  match true => drop\n");
  Encoding enc = Unwrap(Encode(inst));
  const EdgeId ab = *inst.topology.FindEdge(1, 2);
  ASSERT_NE(enc.vars.dropped[ab], nullptr);
  EXPECT_TRUE(IsTrue(enc.vars.dropped[ab]));
  EXPECT_EQ(enc.system.FindVar("dropped_1_2"), nullptr);

  EncoderOptions keep;
  keep.inline_constant_drops = false;
  Encoding raw = Unwrap(Encode(inst, keep));
  EXPECT_GT(raw.system.vars().size(), enc.system.vars().size());
}

TEST(EncoderTest, PathPatternsNeedTheGraphBackend) {
  SrpInstance inst = ParseInstance("NODES d a b\nEDGES d->a a->b\nDEST d\n");
  Encoding enc = Unwrap(Encode(inst));
  PathPattern p;
  p.nodes = {1};
  EXPECT_EQ(EncodePathRegex(p, 2, inst.topology, enc.vars, BackendKind::kStandard)
                .status()
                .code(),
            absl::StatusCode::kUnimplemented);
  EncoderOptions graph;
  graph.backend = BackendKind::kGraph;
  Encoding genc = Unwrap(Encode(inst, graph));
  EXPECT_TRUE(genc.system.HasReaches());
  EXPECT_TRUE(
      EncodePathRegex(p, 2, inst.topology, genc.vars, BackendKind::kGraph).ok());
  auto guarded = ParseAir(
      "NODES d a b\nEDGES d->a a->b\nDEST d\nPOLICY a->b:\n"
      "  match path_has(d,a) => drop\n");
  SrpInstance ginst = Unwrap(ToInstance(Unwrap(std::move(guarded))));
  EXPECT_FALSE(Encode(ginst).ok());
  EXPECT_TRUE(Encode(ginst, graph).ok());
}

std::vector<ChoiceFunction> ModelChoices(const SrpInstance& inst,
                                         const AbstractionLevel& level,
                                         const EncoderOptions& options, size_t limit,
                                         SolveStatus* status) {
  const SrpInstance at = AtLevel(inst, level, PropertySpec::ReachAll());
  Encoding enc = Unwrap(Encode(at, options));
  ConstraintSystem system = enc.system;
  if (system.HasReaches()) system = LowerReaches(system, at.topology, enc.vars.re);
  Enumeration e = EnumerateModels(system, ChoiceTerms(enc.vars), TestSolver(), limit);
  *status = e.final_status;
  std::vector<ChoiceFunction> out;
  for (const Model& m : e.models) out.push_back(DecodeChoice(at.topology, enc.vars, m));
  std::sort(out.begin(), out.end());
  return out;
}

// Every backend and loop-freedom form has exactly the oracle's solutions.
TEST(EncoderTest, VariantsMatchTheOracle) {
  struct Variant {
    BackendKind backend;
    RankMode rank;
  };
  const Variant variants[] = {{BackendKind::kGraph, RankMode::kOrdered},
                              {BackendKind::kStandard, RankMode::kSuccessor}};
  CorpusOptions copts;
  copts.max_nodes = 5;
  for (uint64_t seed = 1000; seed < 1015; ++seed) {
    CorpusInstance c = Unwrap(GenCorpusInstance(seed, copts));
    const auto levels = AbstractionLevel::Hierarchy(c.instance.level.protocol());
    for (const AbstractionLevel& level : {levels.front(), levels.back()}) {
      std::vector<ChoiceFunction> want;
      for (const Labeling& l : Unwrap(EnumerateSolutions(c.instance, level))) {
        want.push_back(l.choice);
      }
      for (const Variant& v : variants) {
        EncoderOptions o;
        o.backend = v.backend;
        o.rank = v.rank;
        SolveStatus status;
        EXPECT_EQ(ModelChoices(c.instance, level, o, want.size() + 1, &status), want)
            << c.name << " " << level.ToString() << " " << BackendName(v.backend);
        EXPECT_EQ(status, SolveStatus::kUnsat);
      }
    }
  }
}

TEST(EncoderTest, RankModesParse) {
  EXPECT_EQ(Unwrap(ParseRankMode("ordered")), RankMode::kOrdered);
  EXPECT_EQ(Unwrap(ParseRankMode("successor")), RankMode::kSuccessor);
  EXPECT_FALSE(ParseRankMode("x").ok());
  EXPECT_EQ(Unwrap(ParseBackend("graph")), BackendKind::kGraph);
  EXPECT_FALSE(ParseBackend("monosat").ok());
}

}  // namespace
}  // namespace acorn
