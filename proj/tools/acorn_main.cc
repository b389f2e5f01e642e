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

// Command-line driver: verify, gen, oracle and bench.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "acorn/air.h"
#include "acorn/benchgen.h"
#include "acorn/corpus.h"
#include "acorn/gml.h"
#include "acorn/oracle.h"
#include "acorn/solver.h"
#include "acorn/verifier.h"

namespace acorn {
namespace {

constexpr int kExitVerified = 0;
constexpr int kExitViolated = 1;
constexpr int kExitError = 2;

int Fail(const absl::Status& s) {
  std::cerr << "error: " << s.message() << "\n";
  return kExitError;
}

struct SolverFlags {
  std::string command;
  double timeout = 600;
  bool keep_scripts = false;

  void Add(CLI::App* app) {
    app->add_option("--solver", command,
                    "solver command template with {file} (default: $ACORN_SOLVER "
                    "or 'z3 -smt2 {file}')");
    app->add_option("--timeout", timeout, "solver timeout in seconds");
    app->add_flag("--keep-scripts", keep_scripts, "keep emitted SMT-LIB scripts");
  }

  SolverConfig Config() const {
    SolverConfig c = SolverConfig::FromEnvironment();
    if (!command.empty()) c.command = command;
    c.timeout_seconds = timeout;
    c.keep_scripts = keep_scripts;
    return c;
  }
};

absl::StatusOr<SrpInstance> LoadInstance(const std::string& path,
                                         const AbstractionLevel& level) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".gml") {
    std::ifstream in(path);
    if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
    std::stringstream ss;
    ss << in.rdbuf();
    absl::StatusOr<AirModel> model = IngestGml(ss.str());
    if (!model.ok()) return model.status();
    return ToInstance(*std::move(model), level);
  }
  absl::StatusOr<AirModel> model = ReadAirFile(path);
  if (!model.ok()) return model.status();
  return ToInstance(*std::move(model), level);
}

absl::Status WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return absl::OkStatus();
  }
  std::ofstream out(path);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  out << text;
  return absl::OkStatus();
}

// ---- verify ----

struct VerifyArgs {
  std::string file;
  std::string prop;
  std::string level = "star";
  std::string backend = "standard";
  std::string refine = "escalate";
  std::string rank = "ordered";
  int max_blocks = 32;
  SolverFlags solver;
};

int RunVerify(const VerifyArgs& a) {
  absl::StatusOr<AbstractionLevel> level = AbstractionLevel::Parse(a.level);
  if (!level.ok()) return Fail(level.status());
  absl::StatusOr<BackendKind> backend = ParseBackend(a.backend);
  if (!backend.ok()) return Fail(backend.status());
  absl::StatusOr<RefineMode> mode = ParseRefineMode(a.refine);
  if (!mode.ok()) return Fail(mode.status());
  absl::StatusOr<RankMode> rank = ParseRankMode(a.rank);
  if (!rank.ok()) return Fail(rank.status());
  absl::StatusOr<SrpInstance> inst = LoadInstance(a.file, *level);
  if (!inst.ok()) return Fail(inst.status());
  absl::StatusOr<PropertySpec> prop = ParseProperty(a.prop, inst->topology);
  if (!prop.ok()) return Fail(prop.status());

  VerifyConfig cfg;
  cfg.solver = a.solver.Config();
  cfg.encoder.backend = *backend;
  cfg.encoder.rank = *rank;
  RefinePolicy refine{*mode, a.max_blocks};
  absl::StatusOr<Verdict> v = Verify(*inst, *prop, cfg, refine);
  if (!v.ok()) return Fail(v.status());

  std::cout << VerdictKindName(v->kind) << "\n";
  std::cout << "property: " << PropertyToString(*prop, inst->topology) << "\n";
  for (const VerifyStep& s : v->trace) {
    std::cout << "  " << s.level.ToString() << ": " << SolveStatusName(s.status)
              << " (" << s.num_vars << " vars, " << s.num_assertions
              << " assertions, " << s.seconds << " s)";
    if (s.validation) {
      if (s.validation->genuine) {
        std::cout << " genuine counterexample";
      } else {
        std::cout << " spurious at " << inst->topology.name(s.validation->node)
                  << ": " << s.validation->evidence;
      }
    }
    std::cout << "\n";
  }
  if (!v->detail.empty()) std::cout << v->detail << "\n";
  if (v->counterexample) {
    std::cout << "counterexample (" << v->counterexample->level.ToString() << "):\n"
              << CounterexampleToString(*inst, *v->counterexample);
  }
  std::cout << "refinements: " << v->refinements << "\n";
  switch (v->kind) {
    case Verdict::Kind::kVerified:
      return kExitVerified;
    case Verdict::Kind::kViolated:
      return kExitViolated;
    default:
      return kExitError;
  }
}

// ---- gen ----

struct GenArgs {
  std::string family;
  int k = 4;
  std::string policy = "shortest-path";
  std::string shape;
  size_t nodes = 0;
  uint64_t seed = 1;
  bool gml = false;
  std::string out;
};

int RunGen(const GenArgs& a) {
  std::string text;
  if (a.family == "fattree") {
    absl::StatusOr<FatTreePolicy> p = ParseFatTreePolicy(a.policy);
    if (!p.ok()) return Fail(p.status());
    absl::StatusOr<std::string> air = GenFatTreeAir({a.k, *p});
    if (!air.ok()) return Fail(air.status());
    text = *std::move(air);
  } else if (a.family == "zoo" || a.family == "as") {
    GmlGraph g;
    if (a.family == "zoo") {
      const WanShape* shape = nullptr;
      for (const WanShape& s : ZooShapes()) {
        if (s.name == a.shape) shape = &s;
      }
      if (shape == nullptr) {
        std::string known;
        for (const WanShape& s : ZooShapes()) absl::StrAppend(&known, " ", s.name);
        return Fail(absl::InvalidArgumentError(
            absl::StrCat("unknown --shape '", a.shape, "'; known:", known)));
      }
      g = GenZooLikeGraph(*shape, a.seed);
    } else {
      if (a.nodes < 4) return Fail(absl::InvalidArgumentError("--nodes must be >= 4"));
      g = GenAsGraph(a.nodes, a.seed);
    }
    const std::string gml = WriteGml(g);
    if (a.gml) {
      text = gml;
    } else {
      absl::StatusOr<AirModel> model = IngestGml(gml);
      if (!model.ok()) return Fail(model.status());
      text = PrintAir(*model);
    }
  } else if (a.family == "corpus") {
    absl::StatusOr<CorpusInstance> c = GenCorpusInstance(a.seed);
    if (!c.ok()) return Fail(c.status());
    text = PrintAir(c->instance);
  } else {
    return Fail(absl::InvalidArgumentError(
        absl::StrCat("unknown family '", a.family, "'")));
  }
  absl::Status s = WriteOutput(a.out, text);
  return s.ok() ? 0 : Fail(s);
}

// ---- oracle ----

struct OracleArgs {
  uint64_t seeds = 500;
  uint64_t first_seed = 1;
  size_t max_nodes = 8;
  uint64_t faithfulness = 0;
  SolverFlags solver;
};

int RunOracle(const OracleArgs& a) {
  CorpusOptions copts;
  copts.max_nodes = a.max_nodes;
  OracleOptions oopts;
  oopts.max_nodes = std::max<size_t>(a.max_nodes, oopts.max_nodes);
  uint64_t violations = 0, zero = 0, checked = 0;
  for (uint64_t seed = a.first_seed; seed < a.first_seed + a.seeds; ++seed) {
    absl::StatusOr<CorpusInstance> c = GenCorpusInstance(seed, copts);
    if (!c.ok()) return Fail(c.status());
    absl::StatusOr<OverapproxReport> r = CheckOverapprox(c->instance, oopts);
    if (!r.ok()) return Fail(r.status());
    ++checked;
    if (r->concrete_solutions == 0) {
      ++zero;
      std::cout << "warning: " << c->name << " has no concrete solution\n";
    }
    for (const std::string& v : r->violations) {
      ++violations;
      std::cout << c->name << ": " << v << "\n";
    }
  }
  std::cout << "overapproximation: " << checked << " instances, " << violations
            << " violations, " << zero << " without concrete solutions\n";

  uint64_t mismatches = 0;
  if (a.faithfulness > 0) {
    const SolverConfig scfg = a.solver.Config();
    uint64_t compared = 0;
    for (uint64_t seed = a.first_seed; seed < a.first_seed + a.faithfulness; ++seed) {
      absl::StatusOr<CorpusInstance> c = GenCorpusInstance(seed, copts);
      if (!c.ok()) return Fail(c.status());
      for (const AbstractionLevel& level :
           AbstractionLevel::Hierarchy(c->instance.level.protocol())) {
        absl::StatusOr<std::vector<Labeling>> sols =
            EnumerateSolutions(c->instance, level, oopts);
        if (!sols.ok()) return Fail(sols.status());
        const SrpInstance at = AtLevel(c->instance, level, PropertySpec::ReachAll());
        absl::StatusOr<Encoding> enc = Encode(at);
        if (!enc.ok()) return Fail(enc.status());
        Enumeration e = EnumerateModels(enc->system, ChoiceTerms(enc->vars), scfg,
                                        sols->size() + 1);
        if (e.final_status != SolveStatus::kUnsat) {
          return Fail(absl::InternalError(absl::StrCat(
              c->name, ": enumeration ended with ", SolveStatusName(e.final_status),
              " ", e.error)));
        }
        std::vector<ChoiceFunction> got, want;
        for (const Model& m : e.models) got.push_back(DecodeChoice(at.topology, enc->vars, m));
        for (const Labeling& l : *sols) want.push_back(l.choice);
        std::sort(got.begin(), got.end());
        ++compared;
        if (got != want) {
          ++mismatches;
          std::cout << c->name << " at " << level.ToString() << ": " << got.size()
                    << " models vs " << want.size() << " oracle solutions\n";
        }
      }
    }
    std::cout << "faithfulness: " << compared << " instance-levels, " << mismatches
              << " mismatches\n";
  }
  return violations == 0 && mismatches == 0 ? 0 : 1;
}

// ---- bench ----

struct BenchArgs {
  std::string k = "4,8";
  std::string policies = "shortest-path,valley-free";
  std::string levels = "star,concrete";
  std::string backends = "standard";
  std::string rank = "ordered";
  std::string prop = "reach:{last_tor}";
  bool zoo = false;
  int jobs = 1;
  std::string out;
  SolverFlags solver;
};

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct BenchPoint {
  std::string name;
  std::string air;  // Instance source, parsed inside the worker.
  std::string prop;
  AbstractionLevel level;
  BackendKind backend;
};

std::string RunPoint(const BenchPoint& p, const SolverConfig& scfg,
                     RankMode rank) {
  std::string status;
  double seconds = 0;
  int refinements = 0;
  size_t nodes = 0, edges = 0;
  absl::StatusOr<AirModel> model = ParseAir(p.air);
  absl::StatusOr<SrpInstance> inst =
      model.ok() ? ToInstance(*std::move(model), p.level)
                 : absl::StatusOr<SrpInstance>(model.status());
  if (inst.ok()) {
    nodes = inst->topology.num_nodes();
    edges = inst->topology.num_edges();
    absl::StatusOr<PropertySpec> prop = ParseProperty(p.prop, inst->topology);
    if (prop.ok()) {
      VerifyConfig cfg;
      cfg.solver = scfg;
      cfg.encoder.backend = p.backend;
      cfg.encoder.rank = rank;
      absl::StatusOr<Verdict> v = Verify(*inst, *prop, cfg, {RefineMode::kNone});
      if (v.ok()) {
        status = std::string(VerdictKindName(v->kind));
        for (const VerifyStep& s : v->trace) seconds += s.seconds;
        refinements = v->refinements;
      } else {
        status = absl::StrCat("error: ", v.status().message());
      }
    } else {
      status = absl::StrCat("error: ", prop.status().message());
    }
  } else {
    status = absl::StrCat("error: ", inst.status().message());
  }
  return absl::StrCat(CsvField(p.name), ",", nodes, ",", edges, ",", CsvField(p.prop),
                      ",", p.level.ToString(), ",", BackendName(p.backend), ",",
                      CsvField(status), ",", seconds, ",", refinements, "\n");
}

int RunBench(const BenchArgs& a) {
  std::vector<AbstractionLevel> levels;
  for (absl::string_view l : absl::StrSplit(a.levels, ',', absl::SkipEmpty())) {
    absl::StatusOr<AbstractionLevel> level = AbstractionLevel::Parse(l);
    if (!level.ok()) return Fail(level.status());
    levels.push_back(*level);
  }
  std::vector<BackendKind> backends;
  for (absl::string_view b : absl::StrSplit(a.backends, ',', absl::SkipEmpty())) {
    absl::StatusOr<BackendKind> backend = ParseBackend(b);
    if (!backend.ok()) return Fail(backend.status());
    backends.push_back(*backend);
  }
  absl::StatusOr<RankMode> rank = ParseRankMode(a.rank);
  if (!rank.ok()) return Fail(rank.status());

  std::vector<std::pair<std::string, std::string>> instances;  // name, AIR.
  std::vector<std::vector<std::string>> instance_props;  // Per instance.
  if (a.zoo) {
    for (const WanShape& shape : ZooShapes()) {
      absl::StatusOr<AirModel> m = IngestGml(WriteGml(GenZooLikeGraph(shape, 1)));
      if (!m.ok()) return Fail(m.status());
      instances.emplace_back(shape.name, PrintAir(*m));
      instance_props.push_back({"reachall", "notransit"});
    }
  } else {
    for (absl::string_view ks : absl::StrSplit(a.k, ',', absl::SkipEmpty())) {
      int k = 0;
      if (!absl::SimpleAtoi(ks, &k)) {
        return Fail(absl::InvalidArgumentError(absl::StrCat("bad --k value '", ks, "'")));
      }
      for (absl::string_view ps : absl::StrSplit(a.policies, ',', absl::SkipEmpty())) {
        absl::StatusOr<FatTreePolicy> policy = ParseFatTreePolicy(ps);
        if (!policy.ok()) return Fail(policy.status());
        absl::StatusOr<std::string> air = GenFatTreeAir({k, *policy});
        if (!air.ok()) return Fail(air.status());
        instances.emplace_back(absl::StrCat("fattree_k", k, "_", FatTreePolicyName(*policy)),
                               *std::move(air));
        std::string prop = a.prop;
        const size_t at = prop.find("{last_tor}");
        if (at != std::string::npos) {
          prop.replace(at, 10, FatTreeTorName(k - 1, k / 2 - 1));
        }
        instance_props.push_back({prop});
      }
    }
  }

  std::vector<BenchPoint> points;
  for (size_t i = 0; i < instances.size(); ++i) {
    const auto& [name, air] = instances[i];
    for (const std::string& prop : instance_props[i]) {
      for (const AbstractionLevel& level : levels) {
        for (BackendKind backend : backends) {
          points.push_back({name, air, prop, level, backend});
        }
      }
    }
  }
  const SolverConfig scfg = a.solver.Config();
  std::vector<std::string> rows(points.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < points.size(); i = next++) {
      rows[i] = RunPoint(points[i], scfg, *rank);
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < std::max(1, a.jobs); ++j) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  std::string csv = "name,nodes,edges,property,level,backend,status,seconds,refinements\n";
  for (const std::string& r : rows) csv += r;
  absl::Status s = WriteOutput(a.out, csv);
  return s.ok() ? 0 : Fail(s);
}

}  // namespace
}  // namespace acorn

int main(int argc, char** argv) {
  using namespace acorn;
  CLI::App app{"Network control-plane verifier"};
  app.require_subcommand(1);

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "verify a property of an AIR or GML file");
  verify->add_option("file", va.file, "instance (.air or .gml)")->required();
  verify->add_option("--prop", va.prop,
                     "reach:N | reachall | isolate:N | notransit | commeq:N=V | "
                     "pathregex:N=a->b,c")
      ->required();
  verify->add_option("--abs", va.level,
                     "star | lp | lp-pathlen | lp-pathlen-med | concrete | "
                     "ospf-star | path-cost | ospf");
  verify->add_option("--backend", va.backend, "standard | graph");
  verify->add_option("--refine", va.refine, "escalate | block | none");
  verify->add_option("--rank", va.rank, "loop-freedom encoding: ordered | successor");
  verify->add_option("--max-blocks", va.max_blocks, "blocking iterations for --refine block");
  va.solver.Add(verify);

  GenArgs ga;
  CLI::App* gen = app.add_subcommand("gen", "generate a benchmark instance");
  gen->add_option("family", ga.family, "fattree | zoo | as | corpus")->required();
  gen->add_option("--k", ga.k, "FatTree arity");
  gen->add_option("--policy", ga.policy,
                  "shortest-path | valley-free | valley-free-nofilter | buggy | isolation");
  gen->add_option("--shape", ga.shape, "backbone name for zoo");
  gen->add_option("--nodes", ga.nodes, "AS count for as");
  gen->add_option("--seed", ga.seed, "random seed");
  gen->add_flag("--gml", ga.gml, "write GML instead of AIR (zoo and as)");
  gen->add_option("-o,--out", ga.out, "output file (default stdout)");

  OracleArgs oa;
  CLI::App* oracle = app.add_subcommand("oracle", "run the random-corpus oracle checks");
  oracle->add_option("--seeds", oa.seeds, "number of corpus instances");
  oracle->add_option("--first-seed", oa.first_seed, "first seed");
  oracle->add_option("--max-nodes", oa.max_nodes, "largest instance size");
  oracle->add_option("--faithfulness", oa.faithfulness,
                     "also compare solver model enumeration on this many instances");
  oa.solver.Add(oracle);

  BenchArgs ba;
  CLI::App* bench = app.add_subcommand("bench", "time a sweep and write CSV");
  bench->add_option("--k", ba.k, "comma-separated FatTree arities");
  bench->add_option("--policies", ba.policies, "comma-separated FatTree policies");
  bench->add_option("--levels", ba.levels, "comma-separated abstraction levels");
  bench->add_option("--backends", ba.backends, "comma-separated backends");
  bench->add_option("--rank", ba.rank, "loop-freedom encoding: ordered | successor");
  bench->add_option("--prop", ba.prop,
                   "property for FatTree points; {last_tor} names the last ToR");
  bench->add_flag("--zoo", ba.zoo, "sweep the WAN backbones instead of FatTrees");
  bench->add_option("--jobs", ba.jobs, "parallel sweep points");
  bench->add_option("-o,--out", ba.out, "CSV file (default stdout)");
  ba.solver.Add(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }
  if (*verify) return RunVerify(va);
  if (*gen) return RunGen(ga);
  if (*oracle) return RunOracle(oa);
  return RunBench(ba);
}
