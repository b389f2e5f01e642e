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
#include <bit>
#include <optional>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "acorn/status_macros.h"

namespace acorn {
namespace {

int FieldIndex(Field f) { return static_cast<int>(f); }

absl::string_view BestPrefix(Field f) {
  switch (f) {
    case Field::kLp:
      return "maxlp";
    case Field::kPathLen:
      return "minpath";
    case Field::kMed:
      return "minmed";
    case Field::kRouterId:
      return "minrid";
    case Field::kCost:
      return "mincost";
    case Field::kComms:
      return "mincomm";
  }
  return "best";
}

class Encoder {
 public:
  Encoder(const SrpInstance& inst, const EncoderOptions& options)
      : inst_(inst),
        topo_(inst.topology),
        schema_decl_(inst.policy.schema),
        options_(options) {}

  absl::StatusOr<Encoding> Run() {
    out_.schema = inst_.schema;
    out_.level = inst_.level;
    out_.backend = options_.backend;
    out_.system.set_num_nodes(topo_.num_nodes());
    out_.vars.steps = inst_.level.Steps();
    for (const SelectionStep& s : out_.vars.steps) {
      if (!inst_.schema.active.Has(s.field)) {
        return absl::FailedPreconditionError(absl::StrCat(
            "schema lacks field '", FieldName(s.field), "' compared by level ",
            inst_.level.ToString()));
      }
    }
    DeclareNodeVars();
    for (EdgeId e = 0; e < topo_.num_edges(); ++e) {
      RETURN_IF_ERROR(EncodeEdge(e));
    }
    EncodeChoices();
    for (Term& t : EncodeHasRoute(topo_, vars(), sys(), options_.backend,
                                       options_.rank)) {
      sys().Assert(std::move(t));
    }
    EncodeSelection();
    return std::move(out_);
  }

 private:
  VarTable& vars() { return out_.vars; }
  ConstraintSystem& sys() { return out_.system; }
  bool Active(Field f) const { return inst_.schema.active.Has(f); }
  uint32_t Width(Field f) const {
    return FieldWidth(f, inst_.schema.comm_width);
  }
  NodeId dest() const { return topo_.dest(); }

  void DeclareNodeVars() {
    const size_t n = topo_.num_nodes();
    VarTable& v = vars();
    v.nchoice.assign(n, nullptr);
    v.nchoice_width.assign(n, 0);
    v.has_route.assign(n, nullptr);
    for (auto& a : v.attr) a.assign(n, nullptr);
    for (auto& t : v.trans) t.assign(topo_.num_edges(), nullptr);
    v.re.assign(topo_.num_edges(), nullptr);
    v.dropped.assign(topo_.num_edges(), False());
    v.valid.assign(topo_.num_edges(), False());

    for (EdgeId e = 0; e < topo_.num_edges(); ++e) {
      const Edge& edge = topo_.edge(e);
      v.re[e] = edge.to == dest() ? False()
                                  : sys().DeclareBool(ReName(edge.from, edge.to));
    }
    for (NodeId u = 0; u < n; ++u) {
      if (u == dest()) {
        v.has_route[u] = True();
        continue;
      }
      v.nchoice_width[u] = NChoiceWidth(topo_, u);
      v.nchoice[u] = sys().DeclareBv(NChoiceName(u), v.nchoice_width[u]);
      v.has_route[u] = sys().DeclareBool(HasRouteName(u));
    }
    for (Field f : inst_.schema.active.ToVector()) {
      for (NodeId u = 0; u < n; ++u) {
        if (u == dest()) {
          v.attr[FieldIndex(f)][u] = BvConst(Width(f), inst_.init.Get(f).value_or(0));
        } else {
          v.attr[FieldIndex(f)][u] = sys().DeclareBv(AttrName(f, u), Width(f));
        }
      }
    }
  }

  absl::StatusOr<Term> Guard(const Match& m, NodeId sender) {
    switch (m.kind) {
      case Match::Kind::kAlways:
        return True();
      case Match::Kind::kCommEquals:
      case Match::Kind::kCommHasTag: {
        if (!Active(Field::kComms)) {
          return absl::InternalError(
              "community guard reached with communities pruned from the schema");
        }
        Term c = vars().attr_of(Field::kComms, sender);
        if (m.kind == Match::Kind::kCommEquals) {
          return Eq(c, BvConst(c->width, m.value));
        }
        return Bit(c, m.value);
      }
      case Match::Kind::kPathContains:
        return EncodePathRegex(m.path, sender, topo_, vars(), options_.backend);
    }
    return absl::InternalError("unknown match kind");
  }

  // Value written to `f` by a matching non-drop rule (or by the implicit
  // tail when `rule` is null).
  Term RuleValue(Field f, const MatchActionRule* rule, const Edge& edge,
                 uint32_t weight) {
    const uint32_t w = Width(f);
    Term value;
    switch (f) {
      case Field::kLp:
        value = BvConst(w, schema_decl_.default_lp);
        break;
      case Field::kPathLen:
        value = Add(vars().attr_of(f, edge.from), BvConst(w, 1));
        break;
      case Field::kComms:
        value = vars().attr_of(f, edge.from);
        break;
      case Field::kMed:
        value = BvConst(w, 0);
        break;
      case Field::kRouterId:
        value = BvConst(w, edge.from);
        break;
      case Field::kCost:
        value = Add(vars().attr_of(f, edge.from), BvConst(w, weight));
        break;
    }
    if (rule == nullptr) return value;
    const uint64_t comm_max = schema_decl_.CommMax();
    for (const Action& a : rule->actions) {
      switch (a.kind) {
        case Action::Kind::kSetLp:
          if (f == Field::kLp) value = BvConst(w, a.value);
          break;
        case Action::Kind::kSetMed:
          if (f == Field::kMed) value = BvConst(w, a.value);
          break;
        case Action::Kind::kSetComm:
          if (f == Field::kComms) value = BvConst(w, a.value);
          break;
        case Action::Kind::kAddTag:
          if (f == Field::kComms) value = BvOr(value, BvConst(w, uint64_t{1} << a.value));
          break;
        case Action::Kind::kIncrComm:
          if (f == Field::kComms) {
            value = Ite(Ult(BvConst(w, comm_max - a.value), value),
                        BvConst(w, comm_max), Add(value, BvConst(w, a.value)));
          }
          break;
        case Action::Kind::kDrop:
          break;
      }
    }
    return value;
  }

  absl::Status EncodeEdge(EdgeId e) {
    const Edge& edge = topo_.edge(e);
    if (edge.to == dest()) return absl::OkStatus();
    const EdgePolicy& policy = inst_.policy.edge_policies[e];
    const std::vector<MatchActionRule>& rules = policy.rules;
    std::vector<std::optional<Term>> guards(rules.size());
    auto guard = [&](size_t i) -> absl::StatusOr<Term> {
      if (!guards[i]) {
        ASSIGN_OR_RETURN(Term g, Guard(rules[i].match, edge.from));
        guards[i] = g;
      }
      return *guards[i];
    };

    // routeDropped: the first matching rule drops.
    Term dropped = False();
    if (!inst_.IsFailed(e)) {
      int last_drop = -1;
      for (size_t i = 0; i < rules.size(); ++i) {
        if (rules[i].Drops()) last_drop = static_cast<int>(i);
      }
      for (int i = last_drop; i >= 0; --i) {
        ASSIGN_OR_RETURN(Term g, guard(i));
        dropped = rules[i].Drops() ? Or(g, dropped) : And(Not(g), dropped);
      }
    } else {
      dropped = True();
    }
    if (!dropped->is_const() || !options_.inline_constant_drops) {
      Term var = sys().DeclareBool(
          absl::StrCat("dropped_", edge.from, "_", edge.to));
      sys().Assert(Iff(var, dropped));
      dropped = var;
    }
    vars().dropped[e] = dropped;

    std::vector<Term> updates;
    for (Field f : inst_.schema.active.ToVector()) {
      int last_writer = -1;
      for (size_t i = 0; i < rules.size(); ++i) {
        if (!rules[i].Drops() && rules[i].Writes(f)) last_writer = static_cast<int>(i);
      }
      Term value = RuleValue(f, nullptr, edge, policy.weight);
      for (int i = last_writer; i >= 0; --i) {
        if (rules[i].Drops()) continue;
        ASSIGN_OR_RETURN(Term g, guard(i));
        value = Ite(g, RuleValue(f, &rules[i], edge, policy.weight), value);
      }
      const bool is_key = f == Field::kLp || f == Field::kMed || f == Field::kCost;
      if (is_key && !value->is_const() && !vars().steps.empty()) {
        Term var = sys().DeclareBv(
            absl::StrCat("trans_", FieldName(f), "_", edge.from, "_", edge.to),
            value->width);
        sys().Assert(Eq(var, value));
        value = var;
      }
      vars().trans[FieldIndex(f)][e] = value;
      updates.push_back(Eq(vars().attr_of(f, edge.to), value));
    }
    const Term& re = vars().re[e];
    sys().Assert(Implies(re, And(std::move(updates))));
    sys().Assert(Implies(re, Not(dropped)));
    sys().Assert(Implies(re, vars().has_route[edge.from]));
    return absl::OkStatus();
  }

  void EncodeChoices() {
    for (NodeId u = 0; u < topo_.num_nodes(); ++u) {
      if (u == dest()) continue;
      const Term& nc = vars().nchoice[u];
      const uint32_t w = vars().nchoice_width[u];
      const uint32_t none = NoneId(topo_, u);
      sys().Assert(Ule(nc, BvConst(w, none)));
      std::vector<Term> invalid;
      const auto in = topo_.in_edges(u);
      for (uint32_t i = 0; i < in.size(); ++i) {
        const EdgeId e = in[i];
        const NodeId v = topo_.edge(e).from;
        sys().Assert(Iff(Eq(nc, BvConst(w, i)), vars().re[e]));
        invalid.push_back(Or(Not(vars().has_route[v]), vars().dropped[e]));
      }
      sys().Assert(Iff(Eq(nc, BvConst(w, none)), And(std::move(invalid))));
    }
  }

  Term Key(Field f, EdgeId e) {
    const Edge& edge = topo_.edge(e);
    switch (f) {
      case Field::kPathLen:
        return vars().attr_of(f, edge.from);
      case Field::kRouterId:
        return BvConst(Width(f), edge.from);
      default:
        return vars().trans[FieldIndex(f)][e];
    }
  }

  void EncodeSelection() {
    const std::vector<SelectionStep>& steps = vars().steps;
    vars().best.assign(steps.size(), std::vector<Term>(topo_.num_nodes()));
    if (steps.empty()) return;
    for (NodeId u = 0; u < topo_.num_nodes(); ++u) {
      if (u == dest()) continue;
      const auto in = topo_.in_edges(u);
      if (in.empty()) continue;
      const Term& nc = vars().nchoice[u];
      const uint32_t w = vars().nchoice_width[u];
      const Term some = Not(Eq(nc, BvConst(w, NoneId(topo_, u))));
      for (EdgeId e : in) {
        const Edge& edge = topo_.edge(e);
        Term valid = And(vars().has_route[edge.from], Not(vars().dropped[e]));
        if (!valid->is_const()) {
          Term var = sys().DeclareBool(absl::StrCat("nvalid_", edge.from, "_", edge.to));
          sys().Assert(Iff(var, valid));
          valid = var;
        }
        vars().valid[e] = valid;
      }
      std::vector<Term> best(steps.size());
      for (size_t k = 0; k < steps.size(); ++k) {
        const Field f = steps[k].field;
        best[k] = sys().DeclareBv(absl::StrCat(BestPrefix(f), "_", u), Width(f));
        vars().best[k][u] = best[k];
        std::vector<Term> witness;
        for (EdgeId e : in) {
          std::vector<Term> cand{vars().valid[e]};
          for (size_t j = 0; j < k; ++j) {
            cand.push_back(Eq(Key(steps[j].field, e), best[j]));
          }
          Term candidate = And(std::move(cand));
          Term key = Key(f, e);
          Term bound = steps[k].prefer_higher ? Ule(key, best[k]) : Ule(best[k], key);
          sys().Assert(Implies(candidate, bound));
          witness.push_back(And(candidate, Eq(best[k], key)));
        }
        sys().Assert(Implies(some, Or(std::move(witness))));
      }
      for (uint32_t i = 0; i < in.size(); ++i) {
        std::vector<Term> eqs;
        for (size_t k = 0; k < steps.size(); ++k) {
          eqs.push_back(Eq(Key(steps[k].field, in[i]), best[k]));
        }
        sys().Assert(Implies(Eq(nc, BvConst(w, i)), And(std::move(eqs))));
      }
    }
  }

  const SrpInstance& inst_;
  const Topology& topo_;
  const SchemaDecl& schema_decl_;
  EncoderOptions options_;
  Encoding out_;
};

}  // namespace

absl::string_view BackendName(BackendKind b) {
  return b == BackendKind::kStandard ? "standard" : "graph";
}

absl::StatusOr<BackendKind> ParseBackend(absl::string_view text) {
  if (text == "standard" || text == "z3") return BackendKind::kStandard;
  if (text == "graph") return BackendKind::kGraph;
  return absl::InvalidArgumentError(absl::StrCat("unknown backend '", text, "'"));
}

uint32_t NoneId(const Topology& topo, NodeId u) {
  return static_cast<uint32_t>(topo.in_edges(u).size());
}

uint32_t NChoiceWidth(const Topology& topo, NodeId u) {
  const uint32_t codes = NoneId(topo, u) + 1;
  return std::max<uint32_t>(1, std::bit_width(codes - 1));
}

uint32_t RankWidth(size_t num_nodes) {
  const size_t n = std::max<size_t>(num_nodes, 1);
  // ceil(log2 n) + 1
  return static_cast<uint32_t>(std::bit_width(n - 1)) + 1;
}

std::string ReName(NodeId v, NodeId u) { return absl::StrCat("re_", v, "_", u); }
std::string NChoiceName(NodeId u) { return absl::StrCat("nchoice_", u); }
std::string HasRouteName(NodeId u) { return absl::StrCat("hasroute_", u); }
std::string RankName(NodeId u) { return absl::StrCat("rank_", u); }
std::string AttrName(Field f, NodeId u) {
  return absl::StrCat(FieldName(f), "_", u);
}

absl::StatusOr<RankMode> ParseRankMode(absl::string_view text) {
  if (text == "ordered") return RankMode::kOrdered;
  if (text == "successor") return RankMode::kSuccessor;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown rank mode '", text, "'"));
}

std::vector<Term> EncodeHasRoute(const Topology& topo, VarTable& vars,
                                 ConstraintSystem& system, BackendKind backend,
                                 RankMode rank) {
  std::vector<Term> out;
  const NodeId d = topo.dest();
  if (backend == BackendKind::kGraph) {
    for (NodeId u = 0; u < topo.num_nodes(); ++u) {
      if (u == d) continue;
      out.push_back(Iff(vars.has_route[u], Reaches(d, u)));
    }
    return out;
  }
  const uint32_t w = RankWidth(topo.num_nodes());
  vars.rank.assign(topo.num_nodes(), nullptr);
  for (NodeId u = 0; u < topo.num_nodes(); ++u) {
    vars.rank[u] = u == d ? BvConst(w, 0) : system.DeclareBv(RankName(u), w);
  }
  for (NodeId u = 0; u < topo.num_nodes(); ++u) {
    if (u == d) continue;
    std::vector<Term> via;
    for (EdgeId e : topo.in_edges(u)) {
      const NodeId v = topo.edge(e).from;
      via.push_back(And(vars.has_route[v], vars.re[e]));
      Term step = rank == RankMode::kSuccessor
                      ? Eq(vars.rank[u], Add(vars.rank[v], BvConst(w, 1)))
                      : Ult(vars.rank[v], vars.rank[u]);
      out.push_back(Implies(vars.re[e], std::move(step)));
    }
    out.push_back(Iff(vars.has_route[u], Or(std::move(via))));
    out.push_back(Ule(vars.rank[u], BvConst(w, topo.num_nodes())));
  }
  return out;
}

absl::StatusOr<Term> EncodePathRegex(const PathPattern& pattern, NodeId anchor,
                                     const Topology& topo, const VarTable& vars,
                                     BackendKind backend) {
  if (pattern.empty()) return True();
  if (backend != BackendKind::kGraph) {
    return absl::UnimplementedError(
        "path patterns need the graph backend (--backend graph)");
  }
  std::vector<Term> conj;
  NodeId from = topo.dest();
  if (pattern.leading_edge) {
    auto e = topo.FindEdge(pattern.leading_edge->from, pattern.leading_edge->to);
    if (!e) return absl::InvalidArgumentError("path pattern edge is not in the topology");
    conj.push_back(vars.re[*e]);
    from = pattern.leading_edge->to;
  }
  for (NodeId c : pattern.nodes) {
    conj.push_back(Reaches(from, c));
    from = c;
  }
  conj.push_back(Reaches(from, anchor));
  return And(std::move(conj));
}

absl::StatusOr<Encoding> EncodeAbstract(const SrpInstance& inst,
                                        const EncoderOptions& options) {
  if (inst.level.IsFull()) {
    return absl::InvalidArgumentError("EncodeAbstract needs a non-full level");
  }
  return Encoder(inst, options).Run();
}

absl::StatusOr<Encoding> EncodeConcrete(const SrpInstance& inst,
                                        const EncoderOptions& options) {
  if (!inst.level.IsFull()) {
    return absl::InvalidArgumentError("EncodeConcrete needs the full level");
  }
  return Encoder(inst, options).Run();
}

absl::StatusOr<Encoding> Encode(const SrpInstance& inst,
                                const EncoderOptions& options) {
  return inst.level.IsFull() ? EncodeConcrete(inst, options)
                             : EncodeAbstract(inst, options);
}

}  // namespace acorn
