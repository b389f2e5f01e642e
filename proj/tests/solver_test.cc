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
#include "acorn/solver.h"

#include <cstdlib>
#include <set>
#include <string>

#include "acorn/formula.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace acorn {
namespace {

using ::acorn::testing::TestSolver;

TEST(SolverTest, SatModelHoldsDeclaredVariables) {
  ConstraintSystem s;
  Term a = s.DeclareBv("a", 4);
  Term b = s.DeclareBool("b");
  s.Assert(Eq(Add(a, BvConst(4, 3)), BvConst(4, 1)));
  s.Assert(Not(b));
  SolverOutcome o = Solve(s, TestSolver());
  ASSERT_EQ(o.status, SolveStatus::kSat) << o.error;
  EXPECT_EQ(o.model.Value("a"), 14u);
  EXPECT_EQ(o.model.Value("b"), 0u);
  EXPECT_EQ(Evaluate(s.assertions()[0], o.model), 1u);
}

TEST(SolverTest, Unsat) {
  ConstraintSystem s;
  Term a = s.DeclareBv("a", 2);
  s.Assert(Ult(BvConst(2, 2), a));
  SolverOutcome o = Solve(s, TestSolver(), {Ule(a, BvConst(2, 2))});
  EXPECT_EQ(o.status, SolveStatus::kUnsat) << o.error;
  EXPECT_EQ(Solve(s, TestSolver()).status, SolveStatus::kSat);
}

TEST(SolverTest, TimeoutKillsTheProcess) {
  ConstraintSystem s;
  s.Assert(True());
  SolverConfig c = TestSolver();
  c.command = "sleep 30; cat {file}";
  c.timeout_seconds = 0.5;
  SolverOutcome o = Solve(s, c);
  EXPECT_EQ(o.status, SolveStatus::kTimeout);
  EXPECT_LT(o.seconds, 10);
}

TEST(SolverTest, MissingBinaryIsAnError) {
  ConstraintSystem s;
  SolverConfig c = TestSolver();
  c.command = "/nonexistent/solver {file}";
  SolverOutcome o = Solve(s, c);
  EXPECT_EQ(o.status, SolveStatus::kError);
  EXPECT_FALSE(o.error.empty());
}

TEST(SolverTest, GarbageOutputIsAnError) {
  ConstraintSystem s;
  SolverConfig c = TestSolver();
  c.command = "echo banana";
  EXPECT_EQ(Solve(s, c).status, SolveStatus::kError);
}

TEST(EnumerateTest, BlocksEachModel) {
  ConstraintSystem s;
  Term a = s.DeclareBv("a", 3);
  Term b = s.DeclareBool("b");
  s.Assert(Ult(a, BvConst(3, 3)));
  Enumeration all = EnumerateModels(s, {a, b}, TestSolver(), 100);
  ASSERT_EQ(all.final_status, SolveStatus::kUnsat) << all.error;
  ASSERT_EQ(all.models.size(), 6u);
  std::set<std::pair<uint64_t, uint64_t>> seen;
  for (const Model& m : all.models) seen.insert({m.Value("a"), m.Value("b")});
  EXPECT_EQ(seen.size(), 6u);

  Enumeration one = EnumerateModels(s, {a}, TestSolver(), 1);
  EXPECT_EQ(one.final_status, SolveStatus::kSat);
  EXPECT_EQ(one.models.size(), 1u);

  Enumeration projected = EnumerateModels(s, {a}, TestSolver(), 100);
  EXPECT_EQ(projected.models.size(), 3u);
}

TEST(SolverConfigTest, EnvironmentOverridesCommand) {
  const char* old = std::getenv("ACORN_SOLVER");
  const std::string saved = old != nullptr ? old : "";
  setenv("ACORN_SOLVER", "mysolver {file}", 1);
  EXPECT_EQ(SolverConfig::FromEnvironment().command, "mysolver {file}");
  if (old != nullptr) {
    setenv("ACORN_SOLVER", saved.c_str(), 1);
  } else {
    unsetenv("ACORN_SOLVER");
  }
}

}  // namespace
}  // namespace acorn
