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

#include "acorn/formula.h"

#include <cassert>
#include <functional>
#include <stdexcept>
#include <utility>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace acorn {
namespace {

Term Make(Op op, uint32_t width, std::vector<Term> args) {
  auto n = std::make_shared<FormulaNode>();
  n->op = op;
  n->width = width;
  n->args = std::move(args);
  return n;
}

const Term& TrueTerm() {
  static const Term* t = new Term(Make(Op::kTrue, 0, {}));
  return *t;
}

const Term& FalseTerm() {
  static const Term* t = new Term(Make(Op::kFalse, 0, {}));
  return *t;
}

bool BothConst(const Term& a, const Term& b) {
  return a->op == Op::kBvConst && b->op == Op::kBvConst;
}

void CheckSameWidth(const Term& a, const Term& b) {
  if (a->width != b->width) {
    throw std::logic_error(absl::StrCat("width mismatch: ", a->width, " vs ",
                                        b->width));
  }
}

}  // namespace

uint64_t WidthMask(uint32_t width) {
  return width >= 64 ? ~uint64_t{0} : ((uint64_t{1} << width) - 1);
}

Term True() { return TrueTerm(); }
Term False() { return FalseTerm(); }
Term Bool(bool b) { return b ? True() : False(); }

bool IsTrue(const Term& t) { return t->op == Op::kTrue; }
bool IsFalse(const Term& t) { return t->op == Op::kFalse; }

Term BvConst(uint32_t width, uint64_t value) {
  assert(width > 0);
  auto n = std::make_shared<FormulaNode>();
  n->op = Op::kBvConst;
  n->width = width;
  n->value = value & WidthMask(width);
  return n;
}

Term Not(Term a) {
  if (IsTrue(a)) return False();
  if (IsFalse(a)) return True();
  if (a->op == Op::kNot) return a->args[0];
  return Make(Op::kNot, 0, {std::move(a)});
}

Term And(std::vector<Term> args) {
  std::vector<Term> kept;
  for (Term& t : args) {
    if (IsFalse(t)) return False();
    if (IsTrue(t)) continue;
    if (t->op == Op::kAnd) {
      kept.insert(kept.end(), t->args.begin(), t->args.end());
    } else {
      kept.push_back(std::move(t));
    }
  }
  if (kept.empty()) return True();
  if (kept.size() == 1) return kept[0];
  return Make(Op::kAnd, 0, std::move(kept));
}

Term And(Term a, Term b) { return And(std::vector<Term>{std::move(a), std::move(b)}); }

Term Or(std::vector<Term> args) {
  std::vector<Term> kept;
  for (Term& t : args) {
    if (IsTrue(t)) return True();
    if (IsFalse(t)) continue;
    if (t->op == Op::kOr) {
      kept.insert(kept.end(), t->args.begin(), t->args.end());
    } else {
      kept.push_back(std::move(t));
    }
  }
  if (kept.empty()) return False();
  if (kept.size() == 1) return kept[0];
  return Make(Op::kOr, 0, std::move(kept));
}

Term Or(Term a, Term b) { return Or(std::vector<Term>{std::move(a), std::move(b)}); }

Term Implies(Term a, Term b) {
  if (IsFalse(a) || IsTrue(b)) return True();
  if (IsTrue(a)) return b;
  if (IsFalse(b)) return Not(std::move(a));
  return Make(Op::kImplies, 0, {std::move(a), std::move(b)});
}

Term Iff(Term a, Term b) {
  if (IsTrue(a)) return b;
  if (IsTrue(b)) return a;
  if (IsFalse(a)) return Not(std::move(b));
  if (IsFalse(b)) return Not(std::move(a));
  if (a == b) return True();
  return Make(Op::kIff, 0, {std::move(a), std::move(b)});
}

Term Ite(Term c, Term t, Term e) {
  CheckSameWidth(t, e);
  if (IsTrue(c)) return t;
  if (IsFalse(c)) return e;
  if (t == e) return t;
  if (BothConst(t, e) && t->value == e->value) return t;
  if (t->is_bool()) {
    if (IsTrue(t) && IsFalse(e)) return c;
    if (IsFalse(t) && IsTrue(e)) return Not(c);
    if (IsTrue(t)) return Or(c, e);
    if (IsFalse(t)) return And(Not(c), e);
    if (IsTrue(e)) return Implies(c, t);
    if (IsFalse(e)) return And(c, t);
  }
  const uint32_t w = t->width;
  return Make(Op::kIte, w, {std::move(c), std::move(t), std::move(e)});
}

Term Eq(Term a, Term b) {
  CheckSameWidth(a, b);
  if (a->is_bool()) return Iff(std::move(a), std::move(b));
  if (a == b) return True();
  if (BothConst(a, b)) return Bool(a->value == b->value);
  // Push equality with a constant through an ite whose branches are constant.
  if (a->op == Op::kBvConst) std::swap(a, b);
  if (b->op == Op::kBvConst && a->op == Op::kIte &&
      a->args[1]->op == Op::kBvConst && a->args[2]->op == Op::kBvConst) {
    return Ite(a->args[0], Eq(a->args[1], b), Eq(a->args[2], b));
  }
  return Make(Op::kEq, 0, {std::move(a), std::move(b)});
}

Term Ule(Term a, Term b) {
  CheckSameWidth(a, b);
  if (BothConst(a, b)) return Bool(a->value <= b->value);
  if (a == b) return True();
  if (b->op == Op::kBvConst && b->value == WidthMask(b->width)) return True();
  if (a->op == Op::kBvConst && a->value == 0) return True();
  return Make(Op::kUle, 0, {std::move(a), std::move(b)});
}

Term Ult(Term a, Term b) {
  CheckSameWidth(a, b);
  if (BothConst(a, b)) return Bool(a->value < b->value);
  if (a == b) return False();
  if (b->op == Op::kBvConst && b->value == 0) return False();
  return Make(Op::kUlt, 0, {std::move(a), std::move(b)});
}

Term Add(Term a, Term b) {
  CheckSameWidth(a, b);
  if (BothConst(a, b)) return BvConst(a->width, a->value + b->value);
  if (b->op == Op::kBvConst && b->value == 0) return a;
  if (a->op == Op::kBvConst && a->value == 0) return b;
  const uint32_t w = a->width;
  return Make(Op::kAdd, w, {std::move(a), std::move(b)});
}

Term BvOr(Term a, Term b) {
  CheckSameWidth(a, b);
  if (BothConst(a, b)) return BvConst(a->width, a->value | b->value);
  if (b->op == Op::kBvConst && b->value == 0) return a;
  if (a->op == Op::kBvConst && a->value == 0) return b;
  const uint32_t w = a->width;
  return Make(Op::kBvOr, w, {std::move(a), std::move(b)});
}

Term Bit(Term a, uint32_t index) {
  assert(index < a->width);
  if (a->op == Op::kBvConst) return Bool((a->value >> index) & 1u);
  auto n = std::make_shared<FormulaNode>();
  n->op = Op::kBit;
  n->value = index;
  n->args = {std::move(a)};
  return n;
}

Term Reaches(NodeId src, NodeId dst) {
  if (src == dst) return True();
  auto n = std::make_shared<FormulaNode>();
  n->op = Op::kReaches;
  n->src = src;
  n->dst = dst;
  return n;
}

Term ConstraintSystem::Declare(std::string name, uint32_t width) {
  if (index_.contains(name)) {
    throw std::logic_error(absl::StrCat("variable declared twice: ", name));
  }
  index_[name] = vars_.size();
  vars_.push_back({name, width});
  auto n = std::make_shared<FormulaNode>();
  n->op = Op::kVar;
  n->width = width;
  n->name = std::move(name);
  return n;
}

Term ConstraintSystem::DeclareBool(std::string name) {
  return Declare(std::move(name), 0);
}

Term ConstraintSystem::DeclareBv(std::string name, uint32_t width) {
  assert(width > 0);
  return Declare(std::move(name), width);
}

void ConstraintSystem::Assert(Term t) {
  assert(t->is_bool());
  if (IsTrue(t)) return;
  if (t->op == Op::kAnd) {
    for (const Term& a : t->args) Assert(a);
    return;
  }
  assertions_.push_back(std::move(t));
}

const VarDecl* ConstraintSystem::FindVar(absl::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &vars_[it->second];
}

bool ConstraintSystem::HasReaches() const {
  absl::flat_hash_set<const FormulaNode*> seen;
  std::vector<const FormulaNode*> stack;
  for (const Term& t : assertions_) stack.push_back(t.get());
  while (!stack.empty()) {
    const FormulaNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->op == Op::kReaches) return true;
    for (const Term& a : n->args) stack.push_back(a.get());
  }
  return false;
}

std::optional<uint64_t> Model::Get(absl::string_view name) const {
  auto it = values_.find(name);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

uint64_t Evaluate(const Term& t, const Model& model) {
  const auto arg = [&](size_t i) { return Evaluate(t->args[i], model); };
  const uint64_t mask = WidthMask(t->width);
  switch (t->op) {
    case Op::kTrue:
      return 1;
    case Op::kFalse:
      return 0;
    case Op::kBvConst:
      return t->value;
    case Op::kVar:
      return model.Value(t->name) & (t->is_bool() ? 1 : mask);
    case Op::kNot:
      return arg(0) ^ 1;
    case Op::kAnd:
      for (size_t i = 0; i < t->args.size(); ++i) {
        if (!arg(i)) return 0;
      }
      return 1;
    case Op::kOr:
      for (size_t i = 0; i < t->args.size(); ++i) {
        if (arg(i)) return 1;
      }
      return 0;
    case Op::kImplies:
      return !arg(0) || arg(1);
    case Op::kIff:
      return arg(0) == arg(1);
    case Op::kIte:
      return arg(0) ? arg(1) : arg(2);
    case Op::kEq:
      return arg(0) == arg(1);
    case Op::kUle:
      return arg(0) <= arg(1);
    case Op::kUlt:
      return arg(0) < arg(1);
    case Op::kAdd:
      return (arg(0) + arg(1)) & mask;
    case Op::kBvOr:
      return arg(0) | arg(1);
    case Op::kBit:
      return (arg(0) >> t->value) & 1u;
    case Op::kReaches:
      throw std::logic_error("cannot evaluate a reaches atom");
  }
  return 0;
}

size_t CountTermNodes(const std::vector<Term>& roots) {
  absl::flat_hash_set<const FormulaNode*> seen;
  std::vector<const FormulaNode*> stack;
  for (const Term& t : roots) stack.push_back(t.get());
  while (!stack.empty()) {
    const FormulaNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const Term& a : n->args) stack.push_back(a.get());
  }
  return seen.size();
}

std::string TermToString(const Term& t) {
  auto join = [&](absl::string_view sep) {
    std::vector<std::string> parts;
    for (const Term& a : t->args) parts.push_back(TermToString(a));
    return absl::StrCat("(", absl::StrJoin(parts, sep), ")");
  };
  switch (t->op) {
    case Op::kTrue:
      return "true";
    case Op::kFalse:
      return "false";
    case Op::kBvConst:
      return absl::StrCat(t->value);
    case Op::kVar:
      return t->name;
    case Op::kNot:
      return absl::StrCat("!", TermToString(t->args[0]));
    case Op::kAnd:
      return join(" & ");
    case Op::kOr:
      return join(" | ");
    case Op::kImplies:
      return join(" -> ");
    case Op::kIff:
      return join(" <-> ");
    case Op::kIte:
      return absl::StrCat("ite", join(", "));
    case Op::kEq:
      return join(" = ");
    case Op::kUle:
      return join(" <= ");
    case Op::kUlt:
      return join(" < ");
    case Op::kAdd:
      return join(" + ");
    case Op::kBvOr:
      return join(" bvor ");
    case Op::kBit:
      return absl::StrCat(TermToString(t->args[0]), "[", t->value, "]");
    case Op::kReaches:
      return absl::StrCat("reaches(", t->src, ", ", t->dst, ")");
  }
  return "?";
}

}  // namespace acorn
