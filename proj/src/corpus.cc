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

#include "acorn/corpus.h"

#include <random>
#include <utility>

#include "absl/strings/str_cat.h"
#include "acorn/status_macros.h"

namespace acorn {
namespace {

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}
  bool Chance(double p) { return std::bernoulli_distribution(p)(gen_); }
  uint32_t Below(uint32_t n) {
    return std::uniform_int_distribution<uint32_t>(0, n - 1)(gen_);
  }
  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[Below(static_cast<uint32_t>(v.size()))];
  }

 private:
  std::mt19937_64 gen_;
};

uint64_t ChoiceProduct(size_t n, const std::vector<Edge>& edges) {
  std::vector<uint64_t> deg(n, 1);
  for (const Edge& e : edges) deg[e.to]++;
  uint64_t total = 1;
  for (size_t u = 1; u < n; ++u) total *= deg[u];
  return total;
}

Match RandomGuard(Rng& rng, const SchemaDecl& s) {
  Match m;
  if (s.comm_mode == CommMode::kBitmask) {
    m.kind = Match::Kind::kCommHasTag;
    m.value = rng.Below(static_cast<uint32_t>(s.tags.size()));
  } else {
    m.kind = Match::Kind::kCommEquals;
    m.value = rng.Below(s.CommMax() + 1);
  }
  return m;
}

Action RandomCommWrite(Rng& rng, const SchemaDecl& s) {
  if (s.comm_mode == CommMode::kBitmask) {
    return {Action::Kind::kAddTag, rng.Below(static_cast<uint32_t>(s.tags.size()))};
  }
  if (rng.Chance(0.5)) return {Action::Kind::kIncrComm, 1};
  return {Action::Kind::kSetComm, rng.Below(s.CommMax() + 1)};
}

Action RandomValueWrite(Rng& rng) {
  static const std::vector<uint32_t> kLps = {50, 100, 150, 200};
  if (rng.Chance(0.7)) return {Action::Kind::kSetLp, rng.Pick(kLps)};
  return {Action::Kind::kSetMed, rng.Below(3)};
}

MatchActionRule RandomRule(Rng& rng, const SchemaDecl& s) {
  MatchActionRule r;
  switch (rng.Below(6)) {
    case 0:  // Guarded drop.
      r.match = RandomGuard(rng, s);
      r.actions = {{Action::Kind::kDrop, 0}};
      break;
    case 1:  // Guarded preference.
      r.match = RandomGuard(rng, s);
      r.actions = {RandomValueWrite(rng)};
      break;
    case 2:  // Tagging.
      r.actions = {RandomCommWrite(rng, s)};
      break;
    case 3:  // Unconditional preference.
      r.actions = {RandomValueWrite(rng)};
      break;
    case 4:  // Guarded tagging.
      r.match = RandomGuard(rng, s);
      r.actions = {RandomCommWrite(rng, s)};
      break;
    default:  // Tag and prefer.
      r.actions = {RandomCommWrite(rng, s), RandomValueWrite(rng)};
      break;
  }
  return r;
}

}  // namespace

absl::StatusOr<CorpusInstance> GenCorpusInstance(uint64_t seed,
                                                 const CorpusOptions& options) {
  Rng rng(seed);
  const size_t span = options.max_nodes - options.min_nodes + 1;
  const size_t n = options.min_nodes + rng.Below(static_cast<uint32_t>(span));

  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) names.push_back(absl::StrCat("n", i));

  // A random tree rooted at n0 keeps most nodes reachable; extra edges go in
  // either direction.
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  auto add = [&](NodeId a, NodeId b) {
    if (a == b || present[a][b]) return;
    present[a][b] = true;
    edges.push_back({a, b});
  };
  for (NodeId u = 1; u < n; ++u) {
    const NodeId parent = rng.Below(u);
    add(parent, u);
    if (rng.Chance(0.5)) add(u, parent);
  }
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      if (a == b || present[a][b]) continue;
      if (!rng.Chance(options.edge_probability)) continue;
      std::vector<Edge> trial = edges;
      trial.push_back({a, b});
      if (ChoiceProduct(n, trial) > options.max_choice_functions) continue;
      add(a, b);
    }
  }
  ASSIGN_OR_RETURN(Topology topo, Topology::Create(names, edges, 0));

  PolicyIR policy;
  SchemaDecl& s = policy.schema;
  if (rng.Chance(options.counter_probability)) {
    s.comm_mode = CommMode::kCounter;
    s.counter_width = 2;
  } else {
    s.comm_mode = CommMode::kBitmask;
    s.tags = rng.Chance(0.5) ? std::vector<std::string>{"t0"}
                             : std::vector<std::string>{"t0", "t1"};
  }
  policy.edge_policies.resize(topo.num_edges());
  for (EdgePolicy& ep : policy.edge_policies) {
    const uint32_t rules = rng.Below(static_cast<uint32_t>(options.max_rules_per_edge + 1));
    for (uint32_t i = 0; i < rules; ++i) ep.rules.push_back(RandomRule(rng, s));
    ep.weight = 1 + rng.Below(3);
  }
  if (rng.Chance(options.relationship_probability)) {
    std::vector<EdgeRel> rels(topo.num_edges(), EdgeRel::kPeer);
    static const std::vector<EdgeRel> kRels = {
        EdgeRel::kCustomerToProvider, EdgeRel::kProviderToCustomer, EdgeRel::kPeer};
    for (EdgeId e = 0; e < topo.num_edges(); ++e) {
      const Edge& edge = topo.edge(e);
      const auto back = topo.FindEdge(edge.to, edge.from);
      if (back && *back < e) {
        rels[e] = Reverse(rels[*back]);
      } else {
        rels[e] = rng.Pick(kRels);
      }
    }
    policy.relationships = std::move(rels);
  }

  const Protocol protocol =
      rng.Chance(options.ospf_probability) ? Protocol::kOspf : Protocol::kBgp;
  ASSIGN_OR_RETURN(SrpInstance inst,
                   MakeInstance(std::move(topo), std::move(policy),
                                AbstractionLevel::Star(protocol)));
  if (rng.Chance(options.failure_probability) && inst.topology.num_edges() > 0) {
    const uint32_t count = 1 + rng.Below(2);
    for (uint32_t i = 0; i < count; ++i) {
      inst.failed[rng.Below(static_cast<uint32_t>(inst.topology.num_edges()))] = true;
    }
  }

  CorpusInstance out;
  out.seed = seed;
  out.name = absl::StrCat("corpus_", seed);
  const NodeId last = static_cast<NodeId>(n - 1);
  const NodeId any = n > 1 ? 1 + rng.Below(static_cast<uint32_t>(n - 1)) : 0;
  out.properties.push_back(PropertySpec::Reach(last));
  out.properties.push_back(PropertySpec::ReachAll());
  out.properties.push_back(PropertySpec::Isolation(any));
  out.properties.push_back(PropertySpec::CommEquals(
      any, rng.Below(inst.policy.schema.CommMax() + 1)));
  if (inst.policy.relationships) out.properties.push_back(PropertySpec::NoTransit());
  out.instance = std::move(inst);
  return out;
}

}  // namespace acorn
