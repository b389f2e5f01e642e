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

#include "acorn/benchgen.h"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "acorn/instance.h"
#include "acorn/status_macros.h"

namespace acorn {
namespace {

MatchActionRule Rule(Match m, std::vector<Action> actions) {
  return MatchActionRule{std::move(m), std::move(actions)};
}

Match Always() { return Match{}; }

Match CommEq(uint32_t v) {
  Match m;
  m.kind = Match::Kind::kCommEquals;
  m.value = v;
  return m;
}

Match CommHas(uint32_t tag) {
  Match m;
  m.kind = Match::Kind::kCommHasTag;
  m.value = tag;
  return m;
}

Action Drop() { return {Action::Kind::kDrop, 0}; }
Action Incr() { return {Action::Kind::kIncrComm, 1}; }

// Relationship labels for a generated graph from BFS depth.
void OrientByDepth(GmlGraph& g, size_t root) {
  std::vector<std::vector<size_t>> adj(g.labels.size());
  for (const GmlGraph::Link& l : g.links) {
    adj[l.source].push_back(l.target);
    adj[l.target].push_back(l.source);
  }
  std::vector<int> depth(g.labels.size(), -1);
  std::deque<size_t> queue{root};
  depth[root] = 0;
  while (!queue.empty()) {
    const size_t u = queue.front();
    queue.pop_front();
    for (size_t v : adj[u]) {
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
    }
  }
  for (GmlGraph::Link& l : g.links) {
    if (depth[l.source] < depth[l.target]) {
      l.rel = EdgeRel::kProviderToCustomer;
    } else if (depth[l.source] > depth[l.target]) {
      l.rel = EdgeRel::kCustomerToProvider;
    } else {
      l.rel = EdgeRel::kPeer;
    }
  }
}

}  // namespace

absl::string_view FatTreePolicyName(FatTreePolicy p) {
  switch (p) {
    case FatTreePolicy::kShortestPath:
      return "shortest-path";
    case FatTreePolicy::kValleyFree:
      return "valley-free";
    case FatTreePolicy::kValleyFreeNoFilter:
      return "valley-free-nofilter";
    case FatTreePolicy::kValleyFreeBuggy:
      return "buggy";
    case FatTreePolicy::kIsolationRegex:
      return "isolation";
  }
  return "?";
}

absl::StatusOr<FatTreePolicy> ParseFatTreePolicy(absl::string_view text) {
  for (FatTreePolicy p :
       {FatTreePolicy::kShortestPath, FatTreePolicy::kValleyFree,
        FatTreePolicy::kValleyFreeNoFilter, FatTreePolicy::kValleyFreeBuggy,
        FatTreePolicy::kIsolationRegex}) {
    if (text == FatTreePolicyName(p)) return p;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown fattree policy '", text, "'"));
}

std::string FatTreeTorName(int pod, int index) {
  return absl::StrCat("t", pod, "_", index);
}
std::string FatTreeAggrName(int pod, int index) {
  return absl::StrCat("a", pod, "_", index);
}
std::string FatTreeCoreName(int index) { return absl::StrCat("c", index); }

size_t FatTreeNodeCount(int k) {
  return static_cast<size_t>(5) * k * k / 4;
}

absl::StatusOr<AirModel> GenFatTree(const FatTreeParams& params) {
  const int k = params.k;
  if (k < 4 || k % 2 != 0) {
    return absl::InvalidArgumentError("fattree k must be even and at least 4");
  }
  const int half = k / 2;
  std::vector<std::string> names;
  auto tor = [&](int p, int i) { return static_cast<NodeId>(p * k + i); };
  auto aggr = [&](int p, int j) { return static_cast<NodeId>(p * k + half + j); };
  auto core = [&](int c) { return static_cast<NodeId>(k * k + c); };
  for (int p = 0; p < k; ++p) {
    for (int i = 0; i < half; ++i) names.push_back(FatTreeTorName(p, i));
    for (int j = 0; j < half; ++j) names.push_back(FatTreeAggrName(p, j));
  }
  for (int c = 0; c < half * half; ++c) names.push_back(FatTreeCoreName(c));
  const bool with_ext = params.policy == FatTreePolicy::kIsolationRegex;
  const NodeId ext = static_cast<NodeId>(names.size());
  if (with_ext) names.emplace_back(kFatTreeExtName);

  std::vector<Edge> edges;
  auto link = [&](NodeId a, NodeId b) {
    edges.push_back({a, b});
    edges.push_back({b, a});
  };
  for (int p = 0; p < k; ++p) {
    for (int i = 0; i < half; ++i) {
      for (int j = 0; j < half; ++j) link(tor(p, i), aggr(p, j));
    }
    for (int j = 0; j < half; ++j) {
      for (int m = 0; m < half; ++m) link(aggr(p, j), core(j * half + m));
    }
  }
  if (with_ext) {
    for (int c = 0; c < half * half; ++c) link(core(c), ext);
  }

  AirModel model;
  ASSIGN_OR_RETURN(model.topology,
                   Topology::Create(std::move(names), std::move(edges), tor(0, 0)));
  const Topology& topo = model.topology;
  PolicyIR& policy = model.policy;
  policy.edge_policies.assign(topo.num_edges(), EdgePolicy{});

  if (params.policy != FatTreePolicy::kShortestPath) {
    policy.schema.comm_mode = CommMode::kCounter;
    policy.schema.counter_width = 2;
    auto is_aggr = [&](NodeId u) {
      return u < static_cast<NodeId>(k * k) && static_cast<int>(u % k) >= half;
    };
    auto is_last_tor = [&](NodeId u) {
      return u < static_cast<NodeId>(k * k) && static_cast<int>(u / k) == k - 1 &&
             static_cast<int>(u % k) < half;
    };
    for (EdgeId e = 0; e < topo.num_edges(); ++e) {
      const Edge& edge = topo.edge(e);
      std::vector<MatchActionRule>& rules = policy.edge_policies[e].rules;
      if (is_aggr(edge.to) && params.policy != FatTreePolicy::kValleyFreeNoFilter) {
        rules.push_back(Rule(CommEq(2), {Drop()}));
        rules.push_back(Rule(CommEq(3), {Drop()}));
      }
      if (is_aggr(edge.from)) {
        if (params.policy == FatTreePolicy::kValleyFreeBuggy &&
            is_last_tor(edge.to)) {
          rules.push_back(Rule(CommEq(0), {Incr()}));
          rules.push_back(Rule(Always(), {Drop()}));
        } else {
          rules.push_back(Rule(Always(), {Incr()}));
        }
      }
      if (with_ext && edge.to == ext) {
        for (int i = 0; i < half; ++i) {
          Match m;
          m.kind = Match::Kind::kPathContains;
          m.path.nodes = {tor(0, i)};
          rules.push_back(Rule(m, {Drop()}));
        }
      }
    }
  }
  RETURN_IF_ERROR(ValidatePolicy(topo, policy));
  model.init = InitialAttribute(topo, policy.schema);
  return model;
}

absl::StatusOr<std::string> GenFatTreeAir(const FatTreeParams& params) {
  ASSIGN_OR_RETURN(AirModel m, GenFatTree(params));
  return PrintAir(m);
}

absl::StatusOr<PolicyIR> GaoRexfordPolicy(const Topology& topo,
                                          const std::vector<EdgeRel>& rels) {
  if (rels.size() != topo.num_edges()) {
    return absl::InvalidArgumentError("every edge needs a relationship label");
  }
  PolicyIR policy;
  policy.schema.comm_mode = CommMode::kBitmask;
  policy.schema.tags = {std::string(kTagCustomer), std::string(kTagPeer),
                        std::string(kTagProvider)};
  policy.relationships = rels;
  policy.edge_policies.assign(topo.num_edges(), EdgePolicy{});
  constexpr uint32_t kCust = 0, kPeerTag = 1, kProv = 2;
  for (EdgeId e = 0; e < topo.num_edges(); ++e) {
    std::vector<MatchActionRule>& rules = policy.edge_policies[e].rules;
    const EdgeRel rel = rels[e];
    if (rel == EdgeRel::kIntra) continue;
    // The receiver is the sender's peer or provider: export filter.
    if (rel == EdgeRel::kCustomerToProvider || rel == EdgeRel::kPeer) {
      rules.push_back(Rule(CommHas(kPeerTag), {Drop()}));
      rules.push_back(Rule(CommHas(kProv), {Drop()}));
    }
    uint32_t tag = kProv;
    uint32_t lp = kLpProvider;
    if (rel == EdgeRel::kCustomerToProvider) {
      tag = kCust;
      lp = kLpCustomer;
    } else if (rel == EdgeRel::kPeer) {
      tag = kPeerTag;
      lp = kLpPeer;
    }
    rules.push_back(Rule(Always(), {{Action::Kind::kSetComm, 1u << tag},
                                    {Action::Kind::kSetLp, lp}}));
  }
  return policy;
}

absl::StatusOr<AirModel> GenGaoRexford(const Topology& topo,
                                       const std::vector<EdgeRel>& rels) {
  AirModel model;
  model.topology = topo;
  ASSIGN_OR_RETURN(model.policy, GaoRexfordPolicy(topo, rels));
  RETURN_IF_ERROR(ValidatePolicy(topo, model.policy));
  model.init = InitialAttribute(topo, model.policy.schema);
  return model;
}

const std::vector<WanShape>& ZooShapes() {
  static const auto* shapes = new std::vector<WanShape>{
      {"VinaREN", 22, 24},     {"FCCN", 23, 25},      {"GtsHungary", 27, 28},
      {"GtsSlovakia", 32, 34}, {"GRnet", 36, 41},     {"RoEduNet", 41, 45},
      {"LITNET", 42, 42},      {"BellSouth", 47, 62}, {"Tecove", 70, 70},
      {"ULAKNET", 79, 79},
  };
  return *shapes;
}

GmlGraph GenZooLikeGraph(const WanShape& shape, uint64_t seed) {
  std::mt19937_64 rng(seed);
  GmlGraph g;
  for (size_t i = 0; i < shape.nodes; ++i) {
    g.labels.push_back(absl::StrCat(shape.name, "_", i));
  }
  std::set<std::pair<size_t, size_t>> seen;
  auto add = [&](size_t a, size_t b) {
    if (a == b || !seen.insert({std::min(a, b), std::max(a, b)}).second) {
      return false;
    }
    g.links.push_back({a, b, std::nullopt});
    return true;
  };
  for (size_t i = 1; i < shape.nodes; ++i) {
    add(std::uniform_int_distribution<size_t>(0, i - 1)(rng), i);
  }
  const size_t max_links = shape.nodes * (shape.nodes - 1) / 2;
  const size_t target = std::min(shape.links, max_links);
  std::uniform_int_distribution<size_t> pick(0, shape.nodes - 1);
  while (g.links.size() < target) add(pick(rng), pick(rng));
  g.dest = 0;
  OrientByDepth(g, 0);
  return g;
}

GmlGraph GenAsGraph(size_t nodes, uint64_t seed) {
  std::mt19937_64 rng(seed);
  GmlGraph g;
  nodes = std::max<size_t>(nodes, 4);
  const size_t tier1 = std::max<size_t>(2, nodes / 25);
  const size_t transit = std::max<size_t>(1, nodes / 4);
  for (size_t i = 0; i < nodes; ++i) g.labels.push_back(absl::StrCat("as", i));
  std::set<std::pair<size_t, size_t>> seen;
  auto add = [&](size_t a, size_t b, EdgeRel rel) {
    if (a == b || !seen.insert({std::min(a, b), std::max(a, b)}).second) return;
    g.links.push_back({a, b, rel});
  };
  for (size_t i = 0; i < tier1; ++i) {
    for (size_t j = i + 1; j < tier1; ++j) add(i, j, EdgeRel::kPeer);
  }
  std::bernoulli_distribution coin(0.5);
  const size_t transit_end = std::min(nodes, tier1 + transit);
  for (size_t i = tier1; i < nodes; ++i) {
    // Providers come from earlier, higher tiers.
    const size_t pool = i < transit_end ? i : transit_end;
    const int providers = coin(rng) ? 2 : 1;
    for (int p = 0; p < providers; ++p) {
      add(i, std::uniform_int_distribution<size_t>(0, pool - 1)(rng),
          EdgeRel::kCustomerToProvider);
    }
    if (i < transit_end && i > tier1 && std::bernoulli_distribution(0.3)(rng)) {
      add(i, std::uniform_int_distribution<size_t>(tier1, i - 1)(rng),
          EdgeRel::kPeer);
    }
  }
  g.dest = nodes - 1;
  return g;
}

}  // namespace acorn
