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

#ifndef ACORN_FORMULA_H_
#define ACORN_FORMULA_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/string_view.h"
#include "acorn/topology.h"

namespace acorn {

// Solver-agnostic formula DAG over booleans and fixed-width bit-vectors.
// Nodes are immutable and shared; the builders fold constants.
enum class Op : uint8_t {
  kTrue,
  kFalse,
  kBvConst,
  kVar,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kIte,
  kEq,
  kUle,
  kUlt,
  kAdd,
  kBvOr,
  kBit,      // Boolean: bit `value` of args[0] is set.
  kReaches,  // Boolean: a path of true routing edges leads src -> dst.
};

struct FormulaNode;
using Term = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  Op op;
  uint32_t width = 0;  // 0 for booleans.
  uint64_t value = 0;  // kBvConst value, or bit index for kBit.
  std::string name;    // kVar only.
  std::vector<Term> args;
  NodeId src = 0;  // kReaches only.
  NodeId dst = 0;

  bool is_bool() const { return width == 0; }
  bool is_const() const {
    return op == Op::kTrue || op == Op::kFalse || op == Op::kBvConst;
  }
};

Term True();
Term False();
Term Bool(bool b);
Term BvConst(uint32_t width, uint64_t value);
Term Not(Term a);
Term And(std::vector<Term> args);
Term And(Term a, Term b);
Term Or(std::vector<Term> args);
Term Or(Term a, Term b);
Term Implies(Term a, Term b);
Term Iff(Term a, Term b);
Term Ite(Term c, Term t, Term e);
Term Eq(Term a, Term b);
Term Ule(Term a, Term b);
Term Ult(Term a, Term b);
Term Add(Term a, Term b);  // Modular.
Term BvOr(Term a, Term b);
Term Bit(Term a, uint32_t index);
Term Reaches(NodeId src, NodeId dst);

bool IsTrue(const Term& t);
bool IsFalse(const Term& t);

// Mask of the low `width` bits.
uint64_t WidthMask(uint32_t width);

struct VarDecl {
  std::string name;
  uint32_t width = 0;  // 0 for booleans.
};

// Variable declarations plus a list of assertions.
class ConstraintSystem {
 public:
  // Declaring the same name twice is a programming error.
  Term DeclareBool(std::string name);
  Term DeclareBv(std::string name, uint32_t width);

  // Asserting a constant true is dropped; constant false is kept.
  void Assert(Term t);

  const std::vector<VarDecl>& vars() const { return vars_; }
  const std::vector<Term>& assertions() const { return assertions_; }
  const VarDecl* FindVar(absl::string_view name) const;
  bool HasReaches() const;
  size_t num_nodes() const { return num_nodes_; }
  void set_num_nodes(size_t n) { num_nodes_ = n; }

 private:
  Term Declare(std::string name, uint32_t width);

  std::vector<VarDecl> vars_;
  absl::flat_hash_map<std::string, size_t> index_;
  std::vector<Term> assertions_;
  size_t num_nodes_ = 0;
};

// Variable assignment returned by a solver; booleans are 0 or 1.
class Model {
 public:
  void Set(std::string name, uint64_t value) { values_[std::move(name)] = value; }
  std::optional<uint64_t> Get(absl::string_view name) const;
  // Missing variables read as 0 (false), which is what the solver would
  // report for unconstrained variables it chose to omit.
  uint64_t Value(absl::string_view name) const { return Get(name).value_or(0); }
  size_t size() const { return values_.size(); }
  const absl::flat_hash_map<std::string, uint64_t>& values() const { return values_; }

 private:
  absl::flat_hash_map<std::string, uint64_t> values_;
};

// Evaluates a reaches-free term. Booleans evaluate to 0 or 1.
uint64_t Evaluate(const Term& t, const Model& model);

// Number of DAG nodes reachable from the assertions.
size_t CountTermNodes(const std::vector<Term>& roots);

// Infix-ish rendering for tests and debugging.
std::string TermToString(const Term& t);

}  // namespace acorn

#endif  // ACORN_FORMULA_H_
