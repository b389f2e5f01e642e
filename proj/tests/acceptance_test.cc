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

// End-to-end acceptance checks. Prints one PASS or FAIL line per criterion
// and exits non-zero if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "acorn/air.h"
#include "acorn/benchgen.h"
#include "acorn/corpus.h"
#include "acorn/gml.h"
#include "acorn/oracle.h"
#include "acorn/verifier.h"

namespace acorn {
namespace {

int failures = 0;

void Report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << name << ": " << detail
            << std::endl;
  if (!ok) ++failures;
}

VerifyConfig Config(double timeout = 600) {
  VerifyConfig cfg;
  cfg.solver = SolverConfig::FromEnvironment();
  cfg.solver.timeout_seconds = timeout;
  return cfg;
}

const RefinePolicy kNoRefine{RefineMode::kNone, 0};

SrpInstance LoadData(const std::string& file, const AbstractionLevel& level) {
  auto model = ReadAirFile(absl::StrCat(ACORN_DATA_DIR, "/", file));
  if (!model.ok()) throw std::runtime_error(std::string(model.status().message()));
  auto inst = ToInstance(*std::move(model), level);
  if (!inst.ok()) throw std::runtime_error(std::string(inst.status().message()));
  return *std::move(inst);
}

SrpInstance FatTree(int k, FatTreePolicy policy, const AbstractionLevel& level) {
  auto model = GenFatTree({k, policy});
  if (!model.ok()) throw std::runtime_error(std::string(model.status().message()));
  auto inst = ToInstance(*std::move(model), level);
  if (!inst.ok()) throw std::runtime_error(std::string(inst.status().message()));
  return *std::move(inst);
}

NodeId Node(const SrpInstance& inst, const std::string& name) {
  auto n = inst.topology.FindNode(name);
  if (!n) throw std::runtime_error("no node " + name);
  return *n;
}

NodeId LastTor(const SrpInstance& inst, int k) {
  return Node(inst, FatTreeTorName(k - 1, k / 2 - 1));
}

Verdict MustVerify(const SrpInstance& inst, const PropertySpec& p,
                   const VerifyConfig& cfg, const RefinePolicy& refine) {
  auto v = Verify(inst, p, cfg, refine);
  if (!v.ok()) throw std::runtime_error(std::string(v.status().message()));
  return *std::move(v);
}

// Ground truth for a property: every concrete solution satisfies it.
bool OracleHolds(const SrpInstance& inst, const PropertySpec& p) {
  const AbstractionLevel full = AbstractionLevel::Hierarchy(inst.level.protocol()).back();
  auto sols = EnumerateSolutions(inst, full);
  if (!sols.ok()) throw std::runtime_error(std::string(sols.status().message()));
  return std::all_of(sols->begin(), sols->end(),
                     [&](const Labeling& l) { return PropertyHolds(p, inst, l); });
}

void Criterion1() {
  CorpusOptions opts;
  opts.max_nodes = 8;
  const VerifyConfig cfg = Config();
  int instances = 0, lemma = 0, theorem = 0, oracle = 0, zero = 0;
  for (uint64_t seed = 1; instances < 500; ++seed) {
    auto c = GenCorpusInstance(seed, opts);
    if (!c.ok()) throw std::runtime_error(std::string(c.status().message()));
    ++instances;
    auto report = CheckOverapprox(c->instance);
    if (!report.ok()) throw std::runtime_error(std::string(report.status().message()));
    lemma += static_cast<int>(report->violations.size());
    if (report->concrete_solutions == 0) ++zero;

    const PropertySpec& p = c->properties[seed % c->properties.size()];
    const auto levels = AbstractionLevel::Hierarchy(c->instance.level.protocol());
    std::vector<Verdict::Kind> kinds;
    for (const AbstractionLevel& level : levels) {
      SrpInstance at = c->instance;
      at.level = level;
      kinds.push_back(MustVerify(at, p, cfg, kNoRefine).kind);
    }
    const bool full_verified = kinds.back() == Verdict::Kind::kVerified;
    for (Verdict::Kind k : kinds) {
      if (k == Verdict::Kind::kVerified && !full_verified) ++theorem;
    }
    const Verdict::Kind want_full =
        OracleHolds(c->instance, p) ? Verdict::Kind::kVerified : Verdict::Kind::kViolated;
    if (kinds.back() != want_full) ++oracle;
  }
  Report(1, "soundness", lemma == 0 && theorem == 0 && oracle == 0,
         absl::StrCat(instances, " instances, ", lemma, " overapproximation violations, ",
                      theorem, " abstract-verified but concrete-unverified, ", oracle,
                      " concrete verdicts disagreeing with the oracle, ", zero,
                      " instances without concrete solutions"));
}

void Criterion2() {
  CorpusOptions opts;
  opts.ospf_probability = 0;
  const SolverConfig scfg = Config().solver;
  const std::vector<AbstractionLevel> levels = {
      AbstractionLevel::Star(), AbstractionLevel::Lp(), AbstractionLevel::Full()};
  int instances = 0, mismatches = 0;
  size_t models = 0;
  for (uint64_t seed = 1; instances < 100; ++seed) {
    auto c = GenCorpusInstance(seed, opts);
    if (!c.ok()) throw std::runtime_error(std::string(c.status().message()));
    ++instances;
    for (const AbstractionLevel& level : levels) {
      auto sols = EnumerateSolutions(c->instance, level);
      if (!sols.ok()) throw std::runtime_error(std::string(sols.status().message()));
      const SrpInstance at = AtLevel(c->instance, level, PropertySpec::ReachAll());
      auto enc = Encode(at);
      if (!enc.ok()) throw std::runtime_error(std::string(enc.status().message()));
      Enumeration e =
          EnumerateModels(enc->system, ChoiceTerms(enc->vars), scfg, sols->size() + 1);
      std::vector<ChoiceFunction> got, want;
      for (const Model& m : e.models) got.push_back(DecodeChoice(at.topology, enc->vars, m));
      for (const Labeling& l : *sols) want.push_back(l.choice);
      std::sort(got.begin(), got.end());
      models += got.size();
      if (e.final_status != SolveStatus::kUnsat || got != want) ++mismatches;
    }
  }
  Report(2, "encoding faithfulness", mismatches == 0,
         absl::StrCat(instances, " instances x 3 levels, ", models, " models, ",
                      mismatches, " mismatches"));
}

void Criterion3() {
  const VerifyConfig cfg = Config();
  const SrpInstance plain = LoadData("five_router_lp.air", AbstractionLevel::Star());
  const Verdict base =
      MustVerify(plain, PropertySpec::Reach(Node(plain, "R5")), cfg, kNoRefine);
  const SrpInstance filtered =
      LoadData("five_router_lp_filtered.air", AbstractionLevel::Star());
  const Verdict v = MustVerify(filtered, PropertySpec::Reach(Node(filtered, "R5")), cfg,
                               {RefineMode::kEscalate, 32});
  const bool spurious_r4 =
      v.trace.size() == 2 && v.trace[0].level == AbstractionLevel::Star() &&
      v.trace[0].validation && !v.trace[0].validation->genuine &&
      v.trace[0].validation->node == Node(filtered, "R4");
  const bool ok = base.kind == Verdict::Kind::kVerified && spurious_r4 &&
                  v.kind == Verdict::Kind::kVerified && v.level == AbstractionLevel::Lp();
  Report(3, "five-router refinement", ok,
         absl::StrCat("plain ", VerdictKindName(base.kind), " at star; filtered: ",
                      spurious_r4 ? "spurious at R4 under star, " : "no spurious R4 step, ",
                      VerdictKindName(v.kind), " at ", v.level.ToString()));
}

void Criterion4() {
  const SrpInstance inst = LoadData("seven_router_diamond.air", AbstractionLevel::Star());
  const Verdict v =
      MustVerify(inst, PropertySpec::Reach(Node(inst, "R7")), Config(), kNoRefine);
  Report(4, "seven-router path sensitivity", v.kind == Verdict::Kind::kVerified,
         absl::StrCat(VerdictKindName(v.kind), " at star"));
}

void Criterion5() {
  std::string detail;
  bool ok = true;
  const std::vector<std::pair<int, double>> budgets = {{10, 60}, {20, 600}};
  for (const auto& [k, budget] : budgets) {
    for (FatTreePolicy policy : {FatTreePolicy::kShortestPath, FatTreePolicy::kValleyFree}) {
      const SrpInstance inst = FatTree(k, policy, AbstractionLevel::Star());
      const Verdict v =
          MustVerify(inst, PropertySpec::Reach(LastTor(inst, k)), Config(budget), kNoRefine);
      const bool pass = v.kind == Verdict::Kind::kVerified && v.seconds < budget;
      ok = ok && pass;
      absl::StrAppend(&detail, "k=", k, " ", FatTreePolicyName(policy), " ",
                      VerdictKindName(v.kind), " ", absl::StrFormat("%.2f", v.seconds),
                      "s; ");
    }
  }
  // Trend: largest k of the sweep where both levels finish in the timeout.
  constexpr double kTrendTimeout = 300;
  bool trend = false;
  for (int k : {12, 10, 8}) {
    bool complete = true;
    double worst = 1e9;
    std::string line;
    for (FatTreePolicy policy : {FatTreePolicy::kShortestPath, FatTreePolicy::kValleyFree}) {
      double secs[2];
      int i = 0;
      for (const AbstractionLevel& level :
           {AbstractionLevel::Star(), AbstractionLevel::Full()}) {
        const SrpInstance inst = FatTree(k, policy, level);
        const Verdict v = MustVerify(inst, PropertySpec::Reach(LastTor(inst, k)),
                                     Config(kTrendTimeout), kNoRefine);
        complete = complete && v.kind == Verdict::Kind::kVerified;
        secs[i++] = v.trace.back().seconds;
      }
      worst = std::min(worst, secs[1] / secs[0]);
      absl::StrAppend(&line, FatTreePolicyName(policy), " star ",
                      absl::StrFormat("%.2f", secs[0]), "s concrete ",
                      absl::StrFormat("%.2f", secs[1]), "s; ");
    }
    if (!complete) continue;
    trend = worst >= 2;
    absl::StrAppend(&detail, "trend at k=", k, ": ", line, "min speedup ",
                    absl::StrFormat("%.1f", worst), "x");
    break;
  }
  Report(5, "fattree scale", ok && trend, detail);
}

void Criterion6() {
  std::string detail;
  bool ok = true;
  for (int k : {4, 8}) {
    const SrpInstance inst = FatTree(k, FatTreePolicy::kValleyFreeBuggy, AbstractionLevel::Star());
    const Verdict v = MustVerify(inst, PropertySpec::Reach(LastTor(inst, k)), Config(),
                                 {RefineMode::kEscalate, 32});
    bool genuine = false;
    if (v.kind == Verdict::Kind::kViolated && v.counterexample) {
      genuine = ValidateCounterexample(inst, *v.counterexample).genuine;
    }
    ok = ok && genuine;
    absl::StrAppend(&detail, "k=", k, " ", VerdictKindName(v.kind), " at ",
                    v.level.ToString(), genuine ? " genuine" : " not genuine", "; ");
  }
  Report(6, "buggy valley-free", ok, detail);
}

void Criterion7() {
  std::string detail;
  bool ok = true;
  for (int k = 4; k <= 12; k += 2) {
    const SrpInstance vf = FatTree(k, FatTreePolicy::kValleyFree, AbstractionLevel::Star());
    const Verdict a =
        MustVerify(vf, PropertySpec::CommEquals(LastTor(vf, k), 3), Config(), kNoRefine);
    const SrpInstance nf =
        FatTree(k, FatTreePolicy::kValleyFreeNoFilter, AbstractionLevel::Star());
    const Verdict b =
        MustVerify(nf, PropertySpec::CommEquals(LastTor(nf, k), 3), Config(), kNoRefine);
    const bool sat = !b.trace.empty() && b.trace[0].status == SolveStatus::kSat;
    ok = ok && a.kind == Verdict::Kind::kVerified && sat;
    absl::StrAppend(&detail, "k=", k, " ", VerdictKindName(a.kind), "/",
                    SolveStatusName(b.trace.empty() ? SolveStatus::kError : b.trace[0].status),
                    "; ");
  }
  Report(7, "valley-free community property", ok,
         detail + "(filtered verdict / unfiltered query status)");
}

void Criterion8() {
  bool ok = true;
  double slowest = 0;
  int count = 0;
  std::string failed;
  for (const WanShape& shape : ZooShapes()) {
    auto model = IngestGml(WriteGml(GenZooLikeGraph(shape, 1)));
    if (!model.ok()) throw std::runtime_error(std::string(model.status().message()));
    auto inst = ToInstance(*std::move(model), AbstractionLevel::Star());
    if (!inst.ok()) throw std::runtime_error(std::string(inst.status().message()));
    ++count;
    for (const PropertySpec& p : {PropertySpec::ReachAll(), PropertySpec::NoTransit()}) {
      const Verdict v = MustVerify(*inst, p, Config(), kNoRefine);
      slowest = std::max(slowest, v.seconds);
      if (v.kind != Verdict::Kind::kVerified || v.seconds >= 5) {
        ok = false;
        absl::StrAppend(&failed, " ", shape.name, "/",
                        PropertyToString(p, inst->topology));
      }
    }
  }
  Report(8, "gao-rexford wan", ok && count == 10,
         absl::StrCat(count, " topologies, slowest query ",
                      absl::StrFormat("%.3f", slowest), "s",
                      failed.empty() ? "" : "; failed:" + failed));
}

void Criterion9() {
  CorpusOptions opts;
  opts.failure_probability = 1;
  const VerifyConfig cfg = Config();
  int instances = 0, set_mismatch = 0, verdict_mismatch = 0;
  for (uint64_t seed = 1; instances < 100; ++seed) {
    auto c = GenCorpusInstance(seed, opts);
    if (!c.ok()) throw std::runtime_error(std::string(c.status().message()));
    if (c->instance.FailedEdges().empty()) continue;
    ++instances;
    const SrpInstance& failed = c->instance;
    const SrpInstance dropped = WithFailuresAsDropRules(failed);
    const auto levels = AbstractionLevel::Hierarchy(failed.level.protocol());
    auto a = EnumerateSolutionsAt(failed, levels);
    auto b = EnumerateSolutionsAt(dropped, levels);
    if (!a.ok() || !b.ok()) throw std::runtime_error("oracle bound exceeded");
    if (*a != *b) ++set_mismatch;
    const PropertySpec& p = c->properties[seed % c->properties.size()];
    for (const AbstractionLevel& level : levels) {
      SrpInstance x = failed, y = dropped;
      x.level = y.level = level;
      if (MustVerify(x, p, cfg, kNoRefine).kind != MustVerify(y, p, cfg, kNoRefine).kind) {
        ++verdict_mismatch;
      }
    }
  }
  Report(9, "failure modeling", set_mismatch == 0 && verdict_mismatch == 0,
         absl::StrCat(instances, " instances, ", set_mismatch,
                      " oracle solution-set mismatches, ", verdict_mismatch,
                      " verdict mismatches"));
}

}  // namespace
}  // namespace acorn

int main() {
  using Fn = void (*)();
  const std::vector<std::pair<int, Fn>> criteria = {
      {1, acorn::Criterion1}, {2, acorn::Criterion2}, {3, acorn::Criterion3},
      {4, acorn::Criterion4}, {5, acorn::Criterion5}, {6, acorn::Criterion6},
      {7, acorn::Criterion7}, {8, acorn::Criterion8}, {9, acorn::Criterion9}};
  for (const auto& [id, fn] : criteria) {
    try {
      fn();
    } catch (const std::exception& e) {
      acorn::Report(id, "error", false, e.what());
    }
  }
  return acorn::failures == 0 ? 0 : 1;
}
