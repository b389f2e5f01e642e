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

#include "acorn/attribute.h"

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace acorn {

absl::string_view FieldName(Field f) {
  switch (f) {
    case Field::kLp:
      return "lp";
    case Field::kPathLen:
      return "path";
    case Field::kComms:
      return "comm";
    case Field::kMed:
      return "med";
    case Field::kRouterId:
      return "rid";
    case Field::kCost:
      return "cost";
  }
  return "?";
}

uint32_t FieldWidth(Field f, int comm_width) {
  switch (f) {
    case Field::kPathLen:
      return 16;
    case Field::kComms:
      return static_cast<uint32_t>(comm_width);
    default:
      return 32;
  }
}

std::vector<Field> FieldSet::ToVector() const {
  std::vector<Field> out;
  for (int i = 0; i < kNumFields; ++i) {
    if (Has(static_cast<Field>(i))) out.push_back(static_cast<Field>(i));
  }
  return out;
}

std::string FieldSet::ToString() const {
  std::vector<absl::string_view> names;
  for (Field f : ToVector()) names.push_back(FieldName(f));
  return absl::StrCat("{", absl::StrJoin(names, ", "), "}");
}

std::optional<uint64_t> Attribute::Get(Field f) const {
  switch (f) {
    case Field::kLp:
      return lp;
    case Field::kPathLen:
      return path_len;
    case Field::kComms:
      return comms;
    case Field::kMed:
      return med;
    case Field::kRouterId:
      return router_id;
    case Field::kCost:
      return cost;
  }
  return std::nullopt;
}

void Attribute::Set(Field f, uint64_t value) {
  switch (f) {
    case Field::kLp:
      lp = static_cast<uint32_t>(value);
      break;
    case Field::kPathLen:
      path_len = static_cast<uint16_t>(value);
      break;
    case Field::kComms:
      comms = static_cast<uint32_t>(value);
      break;
    case Field::kMed:
      med = static_cast<uint32_t>(value);
      break;
    case Field::kRouterId:
      router_id = static_cast<uint32_t>(value);
      break;
    case Field::kCost:
      cost = static_cast<uint32_t>(value);
      break;
  }
}

Attribute Attribute::Project(FieldSet fields) const {
  Attribute out;
  for (Field f : fields.ToVector()) {
    if (auto v = Get(f)) out.Set(f, *v);
  }
  out.as_path = as_path;
  return out;
}

std::string Attribute::DebugString(const Topology* topo) const {
  std::vector<std::string> parts;
  for (int i = 0; i < kNumFields; ++i) {
    Field f = static_cast<Field>(i);
    if (auto v = Get(f)) parts.push_back(absl::StrCat(FieldName(f), "=", *v));
  }
  if (as_path) {
    std::vector<std::string> hops;
    for (NodeId n : *as_path) {
      hops.push_back(topo != nullptr ? topo->name(n) : absl::StrCat(n));
    }
    parts.push_back(absl::StrCat("as_path=[", absl::StrJoin(hops, " "), "]"));
  }
  return absl::StrCat("(", absl::StrJoin(parts, ", "), ")");
}

std::string RouteDebugString(const Route& r, const Topology* topo) {
  return r.has_value() ? r->DebugString(topo) : "NoRoute";
}

}  // namespace acorn
