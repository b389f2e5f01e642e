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
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "acorn/status_macros.h"

namespace acorn {
namespace {

// Lexicographic strict preference over the level's steps.
bool StrictlyBetter(const std::vector<SelectionStep>& steps, const Attribute& a,
                    const Attribute& b) {
  for (const SelectionStep& s : steps) {
    const uint64_t x = a.Get(s.field).value_or(0);
    const uint64_t y = b.Get(s.field).value_or(0);
    if (x == y) continue;
    return s.prefer_higher ? x > y : x < y;
  }
  return false;
}

std::string ChoiceString(const SrpInstance& inst, const ChoiceFunction& c) {
  std::string out;
  const Topology& topo = inst.topology;
  for (NodeId u = 0; u < topo.num_nodes(); ++u) {
    if (u == topo.dest()) continue;
    absl::StrAppend(&out, out.empty() ? "" : " ", topo.name(u), "<-",
                    c[u] < 0 ? "none" : topo.name(topo.edge(topo.in_edges(u)[c[u]]).from));
  }
  return out;
}

}  // namespace

std::optional<Labeling> PropagateChoices(const SrpInstance& inst,
                                         const ChoiceFunction& choice) {
  const Topology& topo = inst.topology;
  const size_t n = topo.num_nodes();
  Labeling out;
  out.choice = choice;
  out.routes.assign(n, kNoRoute);
  // 0 = unvisited, 1 = on stack, 2 = done.
  std::vector<uint8_t> state(n, 0);
  state[topo.dest()] = 2;
  out.routes[topo.dest()] = inst.init;
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (state[start] == 2) continue;
    if (choice[start] < 0) {
      state[start] = 2;
      continue;
    }
    // Walk up the chosen parents until a resolved node.
    NodeId u = start;
    stack.clear();
    while (state[u] != 2) {
      if (state[u] == 1) return std::nullopt;  // Loop.
      if (choice[u] < 0) break;
      state[u] = 1;
      stack.push_back(u);
      u = topo.edge(topo.in_edges(u)[choice[u]]).from;
    }
    if (state[u] != 2) {
      // Reached a None node that was not yet finalized.
      state[u] = 2;
    }
    while (!stack.empty()) {
      const NodeId w = stack.back();
      stack.pop_back();
      const EdgeId e = topo.in_edges(w)[choice[w]];
      const Route& parent = out.routes[topo.edge(e).from];
      if (!parent) return std::nullopt;
      Route r = inst.Transfer(e, parent);
      if (!r) return std::nullopt;
      out.routes[w] = std::move(r);
      state[w] = 2;
    }
  }
  return out;
}

std::vector<std::pair<uint32_t, Attribute>> AvailableRoutes(
    const SrpInstance& inst, const std::vector<Route>& routes, NodeId u) {
  std::vector<std::pair<uint32_t, Attribute>> out;
  const auto in = inst.topology.in_edges(u);
  for (uint32_t i = 0; i < in.size(); ++i) {
    const Route& from = routes[inst.topology.edge(in[i]).from];
    if (!from) continue;
    Route r = inst.Transfer(in[i], from);
    if (r) out.emplace_back(i, *std::move(r));
  }
  return out;
}

std::optional<Instability> FindInstability(const SrpInstance& inst,
                                           const AbstractionLevel& level,
                                           const Labeling& labeling) {
  const Topology& topo = inst.topology;
  const std::vector<SelectionStep> steps = level.Steps();
  for (NodeId u = 0; u < topo.num_nodes(); ++u) {
    if (u == topo.dest()) continue;
    auto avail = AvailableRoutes(inst, labeling.routes, u);
    if (labeling.choice[u] < 0) {
      if (!avail.empty()) {
        const NodeId v = topo.edge(topo.in_edges(u)[avail[0].first]).from;
        return Instability{u,
                           absl::StrCat(topo.name(u), " picks no route but ",
                                        topo.name(v), " offers one"),
                           avail[0].second};
      }
      continue;
    }
    const Route& mine = labeling.routes[u];
    for (const auto& [idx, a] : avail) {
      if (static_cast<int32_t>(idx) == labeling.choice[u]) continue;
      if (StrictlyBetter(steps, a, *mine)) {
        const NodeId v = topo.edge(topo.in_edges(u)[idx]).from;
        return Instability{
            u,
            absl::StrCat(topo.name(u), " prefers the route via ", topo.name(v),
                         " ", a.DebugString(&topo), " under ", level.ToString()),
            a};
      }
    }
  }
  return std::nullopt;
}

absl::StatusOr<std::vector<std::vector<Labeling>>> EnumerateSolutionsAt(
    const SrpInstance& inst, const std::vector<AbstractionLevel>& levels,
    const OracleOptions& options) {
  const Topology& topo = inst.topology;
  const size_t n = topo.num_nodes();
  if (n > options.max_nodes) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "oracle bound exceeded: ", n, " nodes > ", options.max_nodes));
  }
  uint64_t total = 1;
  for (NodeId u = 0; u < n; ++u) {
    if (u == topo.dest()) continue;
    total *= topo.in_edges(u).size() + 1;
    if (total > options.max_choice_functions) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "oracle bound exceeded: more than ", options.max_choice_functions,
          " choice functions"));
    }
  }

  std::vector<std::vector<Labeling>> out(levels.size());
  ChoiceFunction choice(n, -1);
  while (true) {
    if (auto labeling = PropagateChoices(inst, choice)) {
      for (size_t i = 0; i < levels.size(); ++i) {
        if (!FindInstability(inst, levels[i], *labeling)) out[i].push_back(*labeling);
      }
    }
    // Odometer over non-destination nodes.
    NodeId u = 0;
    for (; u < n; ++u) {
      if (u == topo.dest()) continue;
      const int32_t none = -1;
      const int32_t last = static_cast<int32_t>(topo.in_edges(u).size()) - 1;
      if (choice[u] < last) {
        ++choice[u];
        break;
      }
      choice[u] = none;
    }
    if (u == n) break;
  }
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

absl::StatusOr<std::vector<Labeling>> EnumerateSolutions(
    const SrpInstance& inst, const AbstractionLevel& level,
    const OracleOptions& options) {
  ASSIGN_OR_RETURN(auto all, EnumerateSolutionsAt(inst, {level}, options));
  return std::move(all[0]);
}

absl::StatusOr<OverapproxReport> CheckOverapprox(const SrpInstance& inst,
                                                 const OracleOptions& options) {
  const std::vector<AbstractionLevel> levels =
      AbstractionLevel::Hierarchy(inst.level.protocol());
  ASSIGN_OR_RETURN(auto sols, EnumerateSolutionsAt(inst, levels, options));
  OverapproxReport report;
  const std::vector<Labeling>& full = sols.back();
  report.concrete_solutions = full.size();
  for (size_t i = 0; i < levels.size(); ++i) {
    report.level_solutions.push_back(sols[i].size());
    for (const Labeling& l : full) {
      if (!std::binary_search(sols[i].begin(), sols[i].end(), l)) {
        report.violations.push_back(absl::StrCat(
            "concrete solution [", ChoiceString(inst, l.choice),
            "] is not a solution at level ", levels[i].ToString()));
      }
    }
  }
  return report;
}

std::vector<NodeId> FlowPath(const Labeling& labeling, NodeId u) {
  std::vector<NodeId> path;
  const Route& r = labeling.routes[u];
  if (!r) return path;
  if (r->as_path) path.assign(r->as_path->rbegin(), r->as_path->rend());
  path.push_back(u);
  return path;
}

bool PropertyHolds(const PropertySpec& p, const SrpInstance& inst,
                   const Labeling& labeling) {
  const Topology& topo = inst.topology;
  switch (p.kind) {
    case PropertySpec::Kind::kReach:
      return labeling.routes[p.node].has_value();
    case PropertySpec::Kind::kReachAll:
      return std::all_of(labeling.routes.begin(), labeling.routes.end(),
                         [](const Route& r) { return r.has_value(); });
    case PropertySpec::Kind::kIsolation:
      return !labeling.routes[p.node].has_value();
    case PropertySpec::Kind::kNoTransit: {
      const auto& rels = *inst.policy.relationships;
      for (NodeId u = 0; u < topo.num_nodes(); ++u) {
        if (labeling.choice[u] < 0) continue;
        const EdgeId in = topo.in_edges(u)[labeling.choice[u]];
        if (!IsPeerOrProviderEdgeIn(rels[in])) continue;
        for (EdgeId out : topo.out_edges(u)) {
          const NodeId w = topo.edge(out).to;
          if (w == topo.edge(in).from || labeling.choice[w] < 0) continue;
          if (topo.in_edges(w)[labeling.choice[w]] != out) continue;
          if (IsPeerOrProviderEdgeOut(rels[out])) return false;
        }
      }
      return true;
    }
    case PropertySpec::Kind::kCommEquals: {
      const Route& r = labeling.routes[p.node];
      return !r || r->comms != p.value;
    }
    case PropertySpec::Kind::kPathRegexHolds: {
      if (!labeling.routes[p.node]) return true;
      return PathMatches(p.pattern, FlowPath(labeling, p.node));
    }
  }
  return true;
}

}  // namespace acorn
