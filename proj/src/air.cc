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

#include "acorn/air.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "acorn/property.h"
#include "acorn/status_macros.h"

namespace acorn {
namespace {

struct Token {
  absl::string_view text;
  int col = 0;  // 1-based.
};

struct Pos {
  int line = 0;
  int col = 0;
};

absl::Status ErrorAt(Pos p, absl::string_view msg) {
  return absl::InvalidArgumentError(
      absl::StrCat("line ", p.line, " col ", p.col, ": ", msg));
}

std::vector<Token> Tokenize(absl::string_view line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && absl::ascii_isspace(line[i])) ++i;
    if (i >= line.size()) break;
    size_t j = i;
    while (j < line.size() && !absl::ascii_isspace(line[j])) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

struct RawEdge {
  std::string from;
  std::string to;
  Pos pos;
};

struct RawRule {
  std::string pred;
  std::string actions;
  Pos pred_pos;
  Pos action_pos;
};

struct RawPolicy {
  std::vector<RawEdge> edges;
  uint32_t weight = 1;
  std::vector<RawRule> rules;
};

struct RawRel {
  RawEdge edge;
  std::string rel;
};

struct RawDoc {
  bool have_schema = false;
  SchemaDecl schema;
  std::vector<std::pair<std::string, Pos>> nodes;
  std::vector<RawEdge> edges;
  std::optional<std::pair<std::string, Pos>> dest;
  std::vector<RawRel> rels;
  std::vector<RawEdge> failed;
  std::vector<RawPolicy> policies;
};

absl::StatusOr<RawEdge> ParseEdgeToken(const Token& t, Pos pos) {
  const size_t arrow = t.text.find("->");
  if (arrow == absl::string_view::npos || arrow == 0 ||
      arrow + 2 >= t.text.size()) {
    return ErrorAt(pos, absl::StrCat("expected edge 'a->b', got '", t.text, "'"));
  }
  return RawEdge{std::string(t.text.substr(0, arrow)),
                 std::string(t.text.substr(arrow + 2)), pos};
}

absl::StatusOr<uint32_t> ParseNumber(absl::string_view s, Pos pos) {
  uint32_t v = 0;
  if (!absl::SimpleAtoi(s, &v)) {
    return ErrorAt(pos, absl::StrCat("expected a number, got '", s, "'"));
  }
  return v;
}

absl::Status ParseSchemaLine(const std::vector<Token>& toks, int line,
                             RawDoc& doc) {
  if (doc.have_schema) {
    return ErrorAt({line, toks[0].col}, "duplicate SCHEMA");
  }
  doc.have_schema = true;
  bool have_mode = false;
  bool have_width = false;
  bool have_tags = false;
  for (size_t i = 1; i < toks.size(); ++i) {
    const Pos pos{line, toks[i].col};
    const size_t eq = toks[i].text.find('=');
    if (eq == absl::string_view::npos) {
      return ErrorAt(pos, absl::StrCat("expected key=value, got '",
                                       toks[i].text, "'"));
    }
    const absl::string_view key = toks[i].text.substr(0, eq);
    const absl::string_view val = toks[i].text.substr(eq + 1);
    if (key == "comm") {
      if (val == "bitmask") {
        doc.schema.comm_mode = CommMode::kBitmask;
      } else if (val == "counter") {
        doc.schema.comm_mode = CommMode::kCounter;
      } else {
        return ErrorAt(pos, absl::StrCat("unknown comm mode '", val, "'"));
      }
      have_mode = true;
    } else if (key == "tags") {
      for (absl::string_view tag : absl::StrSplit(val, ',', absl::SkipEmpty())) {
        if (!IsValidNodeName(tag)) {
          return ErrorAt(pos, absl::StrCat("invalid tag name '", tag, "'"));
        }
        if (doc.schema.FindTag(tag)) {
          return ErrorAt(pos, absl::StrCat("duplicate tag '", tag, "'"));
        }
        doc.schema.tags.emplace_back(tag);
      }
      have_tags = true;
    } else if (key == "width") {
      ASSIGN_OR_RETURN(uint32_t w, ParseNumber(val, pos));
      doc.schema.counter_width = static_cast<int>(w);
      have_width = true;
    } else if (key == "lp") {
      ASSIGN_OR_RETURN(doc.schema.default_lp, ParseNumber(val, pos));
    } else if (key == "init") {
      ASSIGN_OR_RETURN(doc.schema.init_comm, ParseNumber(val, pos));
    } else {
      return ErrorAt(pos, absl::StrCat("unknown SCHEMA key '", key, "'"));
    }
  }
  if (!have_mode) return ErrorAt({line, toks[0].col}, "SCHEMA needs comm=");
  if (doc.schema.comm_mode == CommMode::kBitmask && have_width) {
    return ErrorAt({line, toks[0].col}, "width= applies to comm=counter");
  }
  if (doc.schema.comm_mode == CommMode::kCounter && have_tags) {
    return ErrorAt({line, toks[0].col}, "tags= applies to comm=bitmask");
  }
  return absl::OkStatus();
}

// First pass: syntax only, names stay unresolved.
absl::StatusOr<RawDoc> ParseSyntax(absl::string_view text) {
  RawDoc doc;
  RawPolicy* current = nullptr;
  int line_no = 0;
  for (absl::string_view raw : absl::StrSplit(text, '\n')) {
    ++line_no;
    absl::string_view line = raw;
    if (const size_t hash = line.find('#'); hash != absl::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<Token> toks = Tokenize(line);
    if (toks.empty()) continue;
    const absl::string_view kw = toks[0].text;
    const Pos kw_pos{line_no, toks[0].col};

    if (kw == "match") {
      if (current == nullptr) {
        return ErrorAt(kw_pos, "match rule outside a POLICY block");
      }
      const size_t start = static_cast<size_t>(toks[0].col - 1) + kw.size();
      const size_t arrow = line.find("=>", start);
      if (arrow == absl::string_view::npos) {
        return ErrorAt(kw_pos, "expected '=>' in match rule");
      }
      absl::string_view pred = line.substr(start, arrow - start);
      absl::string_view acts = line.substr(arrow + 2);
      const size_t pred_lead = pred.size() - absl::StripLeadingAsciiWhitespace(pred).size();
      const size_t act_lead = acts.size() - absl::StripLeadingAsciiWhitespace(acts).size();
      RawRule rule;
      rule.pred = std::string(absl::StripAsciiWhitespace(pred));
      rule.actions = std::string(absl::StripAsciiWhitespace(acts));
      rule.pred_pos = {line_no, static_cast<int>(start + pred_lead) + 1};
      rule.action_pos = {line_no, static_cast<int>(arrow + 2 + act_lead) + 1};
      if (rule.pred.empty()) return ErrorAt(rule.pred_pos, "missing predicate");
      if (rule.actions.empty()) return ErrorAt(rule.action_pos, "missing action");
      current->rules.push_back(std::move(rule));
      continue;
    }
    current = nullptr;

    if (kw == "SCHEMA") {
      RETURN_IF_ERROR(ParseSchemaLine(toks, line_no, doc));
    } else if (kw == "NODES") {
      for (size_t i = 1; i < toks.size(); ++i) {
        doc.nodes.emplace_back(std::string(toks[i].text),
                               Pos{line_no, toks[i].col});
      }
    } else if (kw == "EDGES" || kw == "FAILED") {
      for (size_t i = 1; i < toks.size(); ++i) {
        ASSIGN_OR_RETURN(RawEdge e,
                         ParseEdgeToken(toks[i], {line_no, toks[i].col}));
        (kw == "EDGES" ? doc.edges : doc.failed).push_back(std::move(e));
      }
    } else if (kw == "DEST") {
      if (toks.size() != 2) return ErrorAt(kw_pos, "DEST takes one node");
      if (doc.dest) return ErrorAt(kw_pos, "duplicate DEST");
      doc.dest = {std::string(toks[1].text), Pos{line_no, toks[1].col}};
    } else if (kw == "REL") {
      for (size_t i = 1; i < toks.size(); ++i) {
        const Pos pos{line_no, toks[i].col};
        const size_t colon = toks[i].text.rfind(':');
        if (colon == absl::string_view::npos) {
          return ErrorAt(pos, "expected 'a->b:rel'");
        }
        ASSIGN_OR_RETURN(RawEdge e,
                         ParseEdgeToken({toks[i].text.substr(0, colon), toks[i].col}, pos));
        doc.rels.push_back({std::move(e), std::string(toks[i].text.substr(colon + 1))});
      }
    } else if (kw == "POLICY") {
      RawPolicy p;
      std::vector<Token> rest(toks.begin() + 1, toks.end());
      // The header ends with ':' either glued to the last token or alone.
      if (!rest.empty() && rest.back().text == ":") {
        rest.pop_back();
      } else if (!rest.empty() && rest.back().text.back() == ':') {
        rest.back().text.remove_suffix(1);
      } else {
        return ErrorAt(kw_pos, "POLICY header must end with ':'");
      }
      for (const Token& t : rest) {
        const Pos pos{line_no, t.col};
        if (absl::StartsWith(t.text, "weight=")) {
          ASSIGN_OR_RETURN(p.weight, ParseNumber(t.text.substr(7), pos));
          continue;
        }
        ASSIGN_OR_RETURN(RawEdge e, ParseEdgeToken(t, pos));
        p.edges.push_back(std::move(e));
      }
      if (p.edges.empty()) return ErrorAt(kw_pos, "POLICY needs an edge");
      doc.policies.push_back(std::move(p));
      current = &doc.policies.back();
    } else {
      return ErrorAt(kw_pos, absl::StrCat("unknown section '", kw, "'"));
    }
  }
  return doc;
}

// Splits "a(b,c), d(e)" at top-level commas.
std::vector<std::pair<absl::string_view, size_t>> SplitTopLevel(
    absl::string_view s) {
  std::vector<std::pair<absl::string_view, size_t>> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      absl::string_view piece = s.substr(start, i - start);
      const size_t lead =
          piece.size() - absl::StripLeadingAsciiWhitespace(piece).size();
      out.emplace_back(absl::StripAsciiWhitespace(piece), start + lead);
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  return out;
}

// "name(arg)" -> (name, arg); "name" -> (name, nullopt).
absl::StatusOr<std::pair<absl::string_view, std::optional<absl::string_view>>>
SplitCall(absl::string_view s, Pos pos) {
  const size_t open = s.find('(');
  if (open == absl::string_view::npos) return std::pair{s, std::nullopt};
  if (s.back() != ')') return ErrorAt(pos, absl::StrCat("missing ')' in '", s, "'"));
  return std::pair{absl::StripAsciiWhitespace(s.substr(0, open)),
                   std::optional{absl::StripAsciiWhitespace(
                       s.substr(open + 1, s.size() - open - 2))}};
}

class Resolver {
 public:
  Resolver(const Topology& topo, const SchemaDecl& schema)
      : topo_(topo), schema_(schema) {}

  absl::StatusOr<EdgeId> ResolveEdge(const RawEdge& e) const {
    auto a = topo_.FindNode(e.from);
    if (!a) return ErrorAt(e.pos, absl::StrCat("unknown node '", e.from, "'"));
    auto b = topo_.FindNode(e.to);
    if (!b) return ErrorAt(e.pos, absl::StrCat("unknown node '", e.to, "'"));
    auto id = topo_.FindEdge(*a, *b);
    if (!id) {
      return ErrorAt(e.pos, absl::StrCat("'", e.from, "->", e.to,
                                         "' is not a declared edge"));
    }
    return *id;
  }

  absl::StatusOr<Match> ResolveMatch(const RawRule& r, absl::string_view where) const {
    auto fail = [&](absl::string_view msg) {
      return ErrorAt(r.pred_pos, absl::StrCat(where, ": ", msg));
    };
    Match m;
    ASSIGN_OR_RETURN(auto call, SplitCall(r.pred, r.pred_pos));
    const auto [name, arg] = call;
    if (name == "true" && !arg) return m;
    if (!arg) return fail(absl::StrCat("unknown predicate '", r.pred, "'"));
    if (name == "comm_has") {
      auto tag = schema_.FindTag(*arg);
      if (schema_.comm_mode != CommMode::kBitmask) {
        return fail("comm_has requires comm=bitmask");
      }
      if (!tag) return fail(absl::StrCat("undeclared tag '", *arg, "'"));
      m.kind = Match::Kind::kCommHasTag;
      m.value = *tag;
    } else if (name == "comm_eq") {
      m.kind = Match::Kind::kCommEquals;
      if (!absl::SimpleAtoi(*arg, &m.value)) {
        return fail(absl::StrCat("bad community value '", *arg, "'"));
      }
    } else if (name == "path_has") {
      m.kind = Match::Kind::kPathContains;
      auto p = ParsePathPattern(*arg, topo_);
      if (!p.ok()) return fail(p.status().message());
      if (p->empty()) return fail("empty path pattern");
      m.path = *std::move(p);
    } else {
      return fail(absl::StrCat("unknown predicate '", name, "'"));
    }
    return m;
  }

  absl::StatusOr<std::vector<Action>> ResolveActions(const RawRule& r,
                                                     absl::string_view where) const {
    std::vector<Action> out;
    for (const auto& [piece, offset] : SplitTopLevel(r.actions)) {
      const Pos pos{r.action_pos.line, r.action_pos.col + static_cast<int>(offset)};
      auto fail = [&](absl::string_view msg) {
        return ErrorAt(pos, absl::StrCat(where, ": ", msg));
      };
      if (piece.empty()) return fail("empty action");
      ASSIGN_OR_RETURN(auto call, SplitCall(piece, pos));
      const auto [name, arg] = call;
      if (!arg) {
        if (name == "allow") continue;
        if (name == "drop") {
          out.push_back({Action::Kind::kDrop, 0});
          continue;
        }
        return fail(absl::StrCat("unknown action '", piece, "'"));
      }
      Action a;
      if (name == "add_tag") {
        if (schema_.comm_mode != CommMode::kBitmask) {
          return fail("add_tag requires comm=bitmask");
        }
        auto tag = schema_.FindTag(*arg);
        if (!tag) return fail(absl::StrCat("undeclared tag '", *arg, "'"));
        out.push_back({Action::Kind::kAddTag, *tag});
        continue;
      }
      if (name == "set_lp") {
        a.kind = Action::Kind::kSetLp;
      } else if (name == "set_med") {
        a.kind = Action::Kind::kSetMed;
      } else if (name == "set_comm") {
        a.kind = Action::Kind::kSetComm;
      } else if (name == "incr_comm") {
        a.kind = Action::Kind::kIncrComm;
      } else {
        return fail(absl::StrCat("unknown action '", name, "'"));
      }
      if (!absl::SimpleAtoi(*arg, &a.value)) {
        return fail(absl::StrCat("bad number '", *arg, "'"));
      }
      out.push_back(a);
    }
    return out;
  }

 private:
  const Topology& topo_;
  const SchemaDecl& schema_;
};

std::string RuleToString(const MatchActionRule& r, const Topology& topo,
                         const SchemaDecl& schema) {
  std::string pred;
  switch (r.match.kind) {
    case Match::Kind::kAlways:
      pred = "true";
      break;
    case Match::Kind::kCommEquals:
      pred = absl::StrCat("comm_eq(", r.match.value, ")");
      break;
    case Match::Kind::kCommHasTag:
      pred = absl::StrCat("comm_has(", schema.tags[r.match.value], ")");
      break;
    case Match::Kind::kPathContains:
      pred = absl::StrCat("path_has(", PathPatternToString(r.match.path, topo), ")");
      break;
  }
  std::vector<std::string> acts;
  for (const Action& a : r.actions) {
    switch (a.kind) {
      case Action::Kind::kDrop:
        acts.push_back("drop");
        break;
      case Action::Kind::kAddTag:
        acts.push_back(absl::StrCat("add_tag(", schema.tags[a.value], ")"));
        break;
      case Action::Kind::kSetLp:
        acts.push_back(absl::StrCat("set_lp(", a.value, ")"));
        break;
      case Action::Kind::kSetMed:
        acts.push_back(absl::StrCat("set_med(", a.value, ")"));
        break;
      case Action::Kind::kSetComm:
        acts.push_back(absl::StrCat("set_comm(", a.value, ")"));
        break;
      case Action::Kind::kIncrComm:
        acts.push_back(absl::StrCat("incr_comm(", a.value, ")"));
        break;
    }
  }
  if (acts.empty()) acts.push_back("allow");
  return absl::StrCat("  match ", pred, " => ", absl::StrJoin(acts, ", "));
}

void AppendWrapped(std::string& out, absl::string_view keyword,
                   const std::vector<std::string>& items, size_t per_line) {
  for (size_t i = 0; i < items.size(); i += per_line) {
    absl::StrAppend(&out, keyword);
    for (size_t j = i; j < std::min(items.size(), i + per_line); ++j) {
      absl::StrAppend(&out, " ", items[j]);
    }
    absl::StrAppend(&out, "\n");
  }
}

}  // namespace

bool AirModel::operator==(const AirModel& o) const {
  return topology.names() == o.topology.names() &&
         topology.edges() == o.topology.edges() &&
         topology.dest() == o.topology.dest() && policy == o.policy &&
         init == o.init && failed == o.failed;
}

absl::StatusOr<AirModel> ParseAir(absl::string_view text) {
  ASSIGN_OR_RETURN(RawDoc doc, ParseSyntax(text));

  if (doc.nodes.empty()) return ErrorAt({1, 1}, "missing NODES section");
  if (!doc.dest) return ErrorAt({1, 1}, "missing DEST");

  absl::flat_hash_map<std::string, NodeId> ids;
  std::vector<std::string> names;
  for (const auto& [name, pos] : doc.nodes) {
    if (!IsValidNodeName(name)) {
      return ErrorAt(pos, absl::StrCat("invalid node name '", name, "'"));
    }
    if (!ids.emplace(name, static_cast<NodeId>(names.size())).second) {
      return ErrorAt(pos, absl::StrCat("duplicate node '", name, "'"));
    }
    names.push_back(name);
  }
  auto lookup = [&](const std::string& n, Pos pos) -> absl::StatusOr<NodeId> {
    auto it = ids.find(n);
    if (it == ids.end()) return ErrorAt(pos, absl::StrCat("unknown node '", n, "'"));
    return it->second;
  };
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const RawEdge& e : doc.edges) {
    ASSIGN_OR_RETURN(NodeId a, lookup(e.from, e.pos));
    ASSIGN_OR_RETURN(NodeId b, lookup(e.to, e.pos));
    if (a == b) return ErrorAt(e.pos, "self-loop");
    if (!seen.insert({a, b}).second) {
      return ErrorAt(e.pos, absl::StrCat("duplicate edge '", e.from, "->", e.to, "'"));
    }
    edges.push_back({a, b});
  }
  ASSIGN_OR_RETURN(NodeId dest, lookup(doc.dest->first, doc.dest->second));

  AirModel model;
  ASSIGN_OR_RETURN(model.topology,
                   Topology::Create(std::move(names), std::move(edges), dest));
  const Topology& topo = model.topology;
  model.policy.schema = doc.schema;
  model.policy.edge_policies.assign(topo.num_edges(), EdgePolicy{});
  Resolver resolver(topo, doc.schema);

  std::vector<bool> has_policy(topo.num_edges(), false);
  for (const RawPolicy& rp : doc.policies) {
    std::vector<EdgeId> targets;
    for (const RawEdge& e : rp.edges) {
      ASSIGN_OR_RETURN(EdgeId id, resolver.ResolveEdge(e));
      if (has_policy[id]) {
        return ErrorAt(e.pos, absl::StrCat("second POLICY for ", topo.EdgeName(id)));
      }
      has_policy[id] = true;
      targets.push_back(id);
    }
    EdgePolicy policy;
    policy.weight = rp.weight;
    const std::string where_edge = topo.EdgeName(targets.front());
    for (size_t i = 0; i < rp.rules.size(); ++i) {
      const std::string where =
          absl::StrCat("policy ", where_edge, " rule ", i + 1);
      MatchActionRule rule;
      ASSIGN_OR_RETURN(rule.match, resolver.ResolveMatch(rp.rules[i], where));
      ASSIGN_OR_RETURN(rule.actions, resolver.ResolveActions(rp.rules[i], where));
      policy.rules.push_back(std::move(rule));
    }
    for (EdgeId id : targets) model.policy.edge_policies[id] = policy;
  }

  if (!doc.rels.empty()) {
    std::vector<EdgeRel> rels(topo.num_edges(), EdgeRel::kIntra);
    for (const RawRel& r : doc.rels) {
      ASSIGN_OR_RETURN(EdgeId id, resolver.ResolveEdge(r.edge));
      auto rel = ParseEdgeRel(r.rel);
      if (!rel) {
        return ErrorAt(r.edge.pos, absl::StrCat("unknown relationship '", r.rel, "'"));
      }
      rels[id] = *rel;
    }
    model.policy.relationships = std::move(rels);
  }

  for (const RawEdge& e : doc.failed) {
    ASSIGN_OR_RETURN(EdgeId id, resolver.ResolveEdge(e));
    model.failed.push_back(id);
  }
  std::sort(model.failed.begin(), model.failed.end());
  model.failed.erase(std::unique(model.failed.begin(), model.failed.end()),
                     model.failed.end());

  RETURN_IF_ERROR(ValidatePolicy(topo, model.policy));
  model.init = InitialAttribute(topo, model.policy.schema);
  return model;
}

absl::StatusOr<AirModel> ReadAirFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream ss;
  ss << in.rdbuf();
  auto model = ParseAir(ss.str());
  if (!model.ok()) {
    return absl::Status(model.status().code(),
                        absl::StrCat(path, ": ", model.status().message()));
  }
  return model;
}

std::string PrintAir(const AirModel& model) {
  const Topology& topo = model.topology;
  const SchemaDecl& s = model.policy.schema;
  std::string out;
  if (s.comm_mode == CommMode::kBitmask) {
    absl::StrAppend(&out, "SCHEMA comm=bitmask");
    if (!s.tags.empty()) absl::StrAppend(&out, " tags=", absl::StrJoin(s.tags, ","));
  } else {
    absl::StrAppend(&out, "SCHEMA comm=counter width=", s.counter_width);
  }
  if (s.default_lp != 100) absl::StrAppend(&out, " lp=", s.default_lp);
  if (s.init_comm != 0) absl::StrAppend(&out, " init=", s.init_comm);
  absl::StrAppend(&out, "\n");

  AppendWrapped(out, "NODES", topo.names(), 16);
  std::vector<std::string> edges;
  for (EdgeId e = 0; e < topo.num_edges(); ++e) edges.push_back(topo.EdgeName(e));
  AppendWrapped(out, "EDGES", edges, 8);
  absl::StrAppend(&out, "DEST ", topo.name(topo.dest()), "\n");

  if (model.policy.relationships) {
    std::vector<std::string> rels;
    for (EdgeId e = 0; e < topo.num_edges(); ++e) {
      rels.push_back(absl::StrCat(topo.EdgeName(e), ":",
                                  EdgeRelName((*model.policy.relationships)[e])));
    }
    AppendWrapped(out, "REL", rels, 8);
  }
  if (!model.failed.empty()) {
    std::vector<std::string> failed;
    for (EdgeId e : model.failed) failed.push_back(topo.EdgeName(e));
    AppendWrapped(out, "FAILED", failed, 8);
  }

  // Group identical policies, keeping first-occurrence order.
  std::vector<std::pair<const EdgePolicy*, std::vector<EdgeId>>> groups;
  for (EdgeId e = 0; e < topo.num_edges(); ++e) {
    const EdgePolicy& p = model.policy.edge_policies[e];
    if (p.IsDefault()) continue;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return *g.first == p; });
    if (it == groups.end()) {
      groups.push_back({&p, {e}});
    } else {
      it->second.push_back(e);
    }
  }
  for (const auto& [p, members] : groups) {
    absl::StrAppend(&out, "POLICY");
    for (EdgeId e : members) absl::StrAppend(&out, " ", topo.EdgeName(e));
    if (p->weight != 1) absl::StrAppend(&out, " weight=", p->weight);
    absl::StrAppend(&out, ":\n");
    for (const MatchActionRule& r : p->rules) {
      absl::StrAppend(&out, RuleToString(r, topo, s), "\n");
    }
  }
  return out;
}

std::string PrintAir(const SrpInstance& inst) {
  AirModel m;
  m.topology = inst.topology;
  m.policy = inst.policy;
  m.init = inst.init;
  m.failed = inst.FailedEdges();
  return PrintAir(m);
}

absl::StatusOr<SrpInstance> ToInstance(AirModel model, AbstractionLevel level) {
  std::vector<EdgeId> failed = std::move(model.failed);
  ASSIGN_OR_RETURN(SrpInstance inst,
                   MakeInstance(std::move(model.topology), std::move(model.policy),
                                level));
  for (EdgeId e : failed) inst.failed[e] = true;
  return inst;
}

}  // namespace acorn
