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

#include "acorn/smtlib.h"

#include <charconv>
#include <set>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "acorn/encoder.h"

namespace acorn {
namespace {

std::string Sort(uint32_t width) {
  return width == 0 ? "Bool" : absl::StrCat("(_ BitVec ", width, ")");
}

std::string BvLiteral(uint32_t width, uint64_t value) {
  return absl::StrCat("(_ bv", value, " ", width, ")");
}

// Maps a reaches-carrying system onto a fresh one: variables go to the new
// declarations and reaches atoms to their lowered booleans.
class Renamer {
 public:
  Renamer(const absl::flat_hash_map<std::string, Term>& vars,
          const absl::flat_hash_map<std::pair<NodeId, NodeId>, Term>& reach)
      : vars_(vars), reach_(reach) {}

  Term Run(const Term& t) {
    if (t->op == Op::kVar) return vars_.at(t->name);
    if (t->op == Op::kReaches) return reach_.at({t->src, t->dst});
    if (t->args.empty()) return t;
    if (auto it = memo_.find(t.get()); it != memo_.end()) return it->second;
    std::vector<Term> a;
    for (const Term& c : t->args) a.push_back(Run(c));
    Term r;
    switch (t->op) {
      case Op::kNot: r = Not(a[0]); break;
      case Op::kAnd: r = And(std::move(a)); break;
      case Op::kOr: r = Or(std::move(a)); break;
      case Op::kImplies: r = Implies(a[0], a[1]); break;
      case Op::kIff: r = Iff(a[0], a[1]); break;
      case Op::kIte: r = Ite(a[0], a[1], a[2]); break;
      case Op::kEq: r = Eq(a[0], a[1]); break;
      case Op::kUle: r = Ule(a[0], a[1]); break;
      case Op::kUlt: r = Ult(a[0], a[1]); break;
      case Op::kAdd: r = Add(a[0], a[1]); break;
      case Op::kBvOr: r = BvOr(a[0], a[1]); break;
      case Op::kBit: r = Bit(a[0], static_cast<uint32_t>(t->value)); break;
      default: r = t; break;
    }
    memo_[t.get()] = r;
    return r;
  }

 private:
  const absl::flat_hash_map<std::string, Term>& vars_;
  const absl::flat_hash_map<std::pair<NodeId, NodeId>, Term>& reach_;
  absl::flat_hash_map<const FormulaNode*, Term> memo_;
};

void CollectReaches(const Term& t, absl::flat_hash_set<const FormulaNode*>& seen,
                    std::set<std::pair<NodeId, NodeId>>& out) {
  if (!seen.insert(t.get()).second) return;
  if (t->op == Op::kReaches) out.insert({t->src, t->dst});
  for (const Term& a : t->args) CollectReaches(a, seen, out);
}

class Emitter {
 public:
  std::string Emit(const ConstraintSystem& system, const std::vector<Term>& extra) {
    std::vector<const Term*> roots;
    for (const Term& t : system.assertions()) roots.push_back(&t);
    for (const Term& t : extra) roots.push_back(&t);
    for (const Term* t : roots) Count(*t);

    std::string out = "(set-logic QF_BV)\n(set-option :produce-models true)\n";
    for (const VarDecl& v : system.vars()) {
      absl::StrAppend(&out, "(declare-fun ", v.name, " () ", Sort(v.width), ")\n");
    }
    defs_ = &out;
    for (const Term* t : roots) {
      std::string body = Print(*t);
      absl::StrAppend(&out, "(assert ", body, ")\n");
    }
    absl::StrAppend(&out, "(check-sat)\n(get-model)\n");
    return out;
  }

 private:
  void Count(const Term& t) {
    if (++refs_[t.get()] > 1) return;
    for (const Term& a : t->args) Count(a);
  }

  // Post-order: children are defined before their parents.
  std::string Print(const Term& t) {
    if (auto it = names_.find(t.get()); it != names_.end()) return it->second;
    std::string text = Render(t);
    if (refs_[t.get()] > 1 && !t->args.empty()) {
      std::string name = absl::StrCat("$t", names_.size());
      absl::StrAppend(defs_, "(define-fun ", name, " () ", Sort(t->width), " ",
                      text, ")\n");
      names_[t.get()] = name;
      return name;
    }
    return text;
  }

  std::string Nary(absl::string_view op, const Term& t) {
    std::string s = absl::StrCat("(", op);
    for (const Term& a : t->args) absl::StrAppend(&s, " ", Print(a));
    absl::StrAppend(&s, ")");
    return s;
  }

  std::string Render(const Term& t) {
    switch (t->op) {
      case Op::kTrue:
        return "true";
      case Op::kFalse:
        return "false";
      case Op::kBvConst:
        return BvLiteral(t->width, t->value);
      case Op::kVar:
        return t->name;
      case Op::kNot:
        return Nary("not", t);
      case Op::kAnd:
        return Nary("and", t);
      case Op::kOr:
        return Nary("or", t);
      case Op::kImplies:
        return Nary("=>", t);
      case Op::kIff:
      case Op::kEq:
        return Nary("=", t);
      case Op::kIte:
        return Nary("ite", t);
      case Op::kUle:
        return Nary("bvule", t);
      case Op::kUlt:
        return Nary("bvult", t);
      case Op::kAdd:
        return Nary("bvadd", t);
      case Op::kBvOr:
        return Nary("bvor", t);
      case Op::kBit:
        return absl::StrCat("(= ((_ extract ", t->value, " ", t->value, ") ",
                            Print(t->args[0]), ") #b1)");
      case Op::kReaches:
        break;
    }
    return "?";
  }

  absl::flat_hash_map<const FormulaNode*, int> refs_;
  absl::flat_hash_map<const FormulaNode*, std::string> names_;
  std::string* defs_ = nullptr;
};

class SExprReader {
 public:
  explicit SExprReader(absl::string_view text) : text_(text) {}

  absl::StatusOr<std::vector<SExpr>> ReadAll() {
    std::vector<SExpr> out;
    while (true) {
      SkipSpace();
      if (pos_ >= text_.size()) return out;
      SExpr e;
      absl::Status s = Read(e);
      if (!s.ok()) return s;
      out.push_back(std::move(e));
    }
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size()) {
      if (absl::ascii_isspace(text_[pos_])) {
        ++pos_;
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  absl::Status Read(SExpr& e) {
    SkipSpace();
    if (pos_ >= text_.size()) return absl::InvalidArgumentError("unexpected end of s-expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      e.is_atom = false;
      while (true) {
        SkipSpace();
        if (pos_ >= text_.size()) return absl::InvalidArgumentError("unbalanced '('");
        if (text_[pos_] == ')') {
          ++pos_;
          return absl::OkStatus();
        }
        SExpr child;
        absl::Status s = Read(child);
        if (!s.ok()) return s;
        e.list.push_back(std::move(child));
      }
    }
    if (c == ')') return absl::InvalidArgumentError("unexpected ')'");
    const size_t start = pos_;
    if (c == '"' || c == '|') {
      const char close = c;
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != close) {
        if (close == '"' && text_[pos_] == '"' && pos_ + 1 < text_.size() &&
            text_[pos_ + 1] == '"') {
          ++pos_;
        }
        ++pos_;
      }
      if (pos_ >= text_.size()) return absl::InvalidArgumentError("unterminated literal");
      ++pos_;
    } else {
      while (pos_ < text_.size() && !absl::ascii_isspace(text_[pos_]) &&
             text_[pos_] != '(' && text_[pos_] != ')') {
        ++pos_;
      }
    }
    e.is_atom = true;
    e.atom = std::string(text_.substr(start, pos_ - start));
    if (e.atom.size() >= 2 && e.atom.front() == '|' && e.atom.back() == '|') {
      e.atom = e.atom.substr(1, e.atom.size() - 2);
    }
    return absl::OkStatus();
  }

  absl::string_view text_;
  size_t pos_ = 0;
};

absl::StatusOr<uint64_t> ParseValue(const SExpr& v) {
  if (v.is_atom) {
    if (v.atom == "true") return 1;
    if (v.atom == "false") return 0;
    uint64_t out = 0;
    if (v.atom.size() > 2 && v.atom[0] == '#' && v.atom[1] == 'b') {
      if (v.atom.size() - 2 > 64) return absl::InvalidArgumentError("bit-vector wider than 64 bits");
      for (size_t i = 2; i < v.atom.size(); ++i) {
        if (v.atom[i] != '0' && v.atom[i] != '1') return absl::InvalidArgumentError("bad binary literal");
        out = (out << 1) | static_cast<uint64_t>(v.atom[i] - '0');
      }
      return out;
    }
    if (v.atom.size() > 2 && v.atom[0] == '#' && v.atom[1] == 'x') {
      const char* first = v.atom.data() + 2;
      const char* last = v.atom.data() + v.atom.size();
      auto [end, ec] = std::from_chars(first, last, out, 16);
      if (ec != std::errc() || end != last) {
        return absl::InvalidArgumentError(absl::StrCat("bad hex literal ", v.atom));
      }
      return out;
    }
    if (absl::SimpleAtoi(v.atom, &out)) return out;
    return absl::InvalidArgumentError(absl::StrCat("unsupported model value ", v.atom));
  }
  // (_ bvN w)
  if (v.list.size() == 3 && v.list[0].is_atom && v.list[0].atom == "_" &&
      v.list[1].is_atom && v.list[1].atom.rfind("bv", 0) == 0) {
    uint64_t out = 0;
    if (absl::SimpleAtoi(v.list[1].atom.substr(2), &out)) return out;
  }
  return absl::InvalidArgumentError("unsupported model value");
}

}  // namespace

ConstraintSystem LowerReaches(const ConstraintSystem& system,
                              const Topology& topo, const std::vector<Term>& re) {
  std::set<std::pair<NodeId, NodeId>> atoms;
  absl::flat_hash_set<const FormulaNode*> seen;
  for (const Term& t : system.assertions()) CollectReaches(t, seen, atoms);

  ConstraintSystem out;
  out.set_num_nodes(system.num_nodes());
  absl::flat_hash_map<std::string, Term> var_terms;
  for (const VarDecl& v : system.vars()) {
    var_terms[v.name] = v.width == 0 ? out.DeclareBool(v.name)
                                     : out.DeclareBv(v.name, v.width);
  }
  std::set<NodeId> sources;
  for (const auto& [src, dst] : atoms) sources.insert(src);
  const uint32_t w = RankWidth(topo.num_nodes());
  absl::flat_hash_map<std::pair<NodeId, NodeId>, Term> reach;
  std::vector<Term> defs;
  for (NodeId x : sources) {
    std::vector<Term> dist(topo.num_nodes());
    for (NodeId y = 0; y < topo.num_nodes(); ++y) {
      if (y == x) {
        reach[{x, y}] = True();
        dist[y] = BvConst(w, 0);
      } else {
        reach[{x, y}] = out.DeclareBool(absl::StrCat("reach_", x, "_", y));
        dist[y] = out.DeclareBv(absl::StrCat("rdist_", x, "_", y), w);
        var_terms[reach[{x, y}]->name] = reach[{x, y}];
        var_terms[dist[y]->name] = dist[y];
      }
    }
    for (NodeId y = 0; y < topo.num_nodes(); ++y) {
      if (y == x) continue;
      std::vector<Term> support;
      for (EdgeId e : topo.in_edges(y)) {
        const NodeId p = topo.edge(e).from;
        support.push_back(And({re[e], reach[{x, p}],
                               Eq(dist[y], Add(dist[p], BvConst(w, 1)))}));
        defs.push_back(Implies(And(re[e], reach[{x, p}]), reach[{x, y}]));
      }
      defs.push_back(Implies(reach[{x, y}], Or(std::move(support))));
    }
  }

  Renamer renamer(var_terms, reach);
  for (const Term& t : system.assertions()) out.Assert(renamer.Run(t));
  // The definitions are built over the input system's re terms.
  for (const Term& t : defs) out.Assert(renamer.Run(t));
  return out;
}

absl::StatusOr<std::string> EmitSmtLib(const ConstraintSystem& system,
                                       const std::vector<Term>& extra) {
  if (system.HasReaches()) {
    return absl::FailedPreconditionError(
        "reaches atoms must be lowered before SMT-LIB emission");
  }
  for (const Term& t : extra) {
    std::set<std::pair<NodeId, NodeId>> atoms;
    absl::flat_hash_set<const FormulaNode*> seen;
    CollectReaches(t, seen, atoms);
    if (!atoms.empty()) {
      return absl::FailedPreconditionError("extra assertion contains reaches atoms");
    }
  }
  return Emitter().Emit(system, extra);
}

absl::StatusOr<std::vector<SExpr>> ParseSExprs(absl::string_view text) {
  return SExprReader(text).ReadAll();
}

absl::StatusOr<Model> ParseModel(const SExpr& model) {
  if (model.is_atom) return absl::InvalidArgumentError("model is not a list");
  Model out;
  const std::vector<SExpr>* entries = &model.list;
  // Older z3 releases wrap the body as (model ...).
  std::vector<SExpr> tail;
  if (!entries->empty() && (*entries)[0].is_atom && (*entries)[0].atom == "model") {
    tail.assign(entries->begin() + 1, entries->end());
    entries = &tail;
  }
  for (const SExpr& e : *entries) {
    if (e.is_atom || e.list.size() != 5 || !e.list[0].is_atom ||
        e.list[0].atom != "define-fun" || !e.list[1].is_atom) {
      return absl::InvalidArgumentError("malformed model entry");
    }
    // Skip functions with arguments; the encodings declare constants only.
    if (!e.list[2].is_atom && !e.list[2].list.empty()) continue;
    // Shared subterms emitted as define-fun come back verbatim.
    if (e.list[1].atom.rfind('$', 0) == 0) continue;
    auto value = ParseValue(e.list[4]);
    if (!value.ok()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "model entry ", e.list[1].atom, ": ", value.status().message()));
    }
    out.Set(e.list[1].atom, *value);
  }
  return out;
}

}  // namespace acorn
