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

#include "acorn/abstraction.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "acorn/status_macros.h"

namespace acorn {

using Precision = AbstractionLevel::Precision;

absl::StatusOr<AbstractionLevel> AbstractionLevel::Parse(absl::string_view text) {
  if (text == "star") return Star();
  if (text == "lp") return Lp();
  if (text == "lp-pathlen") return LpPathLen();
  if (text == "lp-pathlen-med") return LpPathLenMed();
  if (text == "concrete" || text == "bgp" || text == "full") return Full();
  if (text == "ospf-star") return Star(Protocol::kOspf);
  if (text == "path-cost") return PathCost();
  if (text == "ospf") return Full(Protocol::kOspf);
  return absl::InvalidArgumentError(
      absl::StrCat("unknown abstraction level '", text, "'"));
}

std::vector<AbstractionLevel> AbstractionLevel::Hierarchy(Protocol protocol) {
  if (protocol == Protocol::kOspf) {
    return {Star(Protocol::kOspf), PathCost(), Full(Protocol::kOspf)};
  }
  return {Star(), Lp(), LpPathLen(), LpPathLenMed(), Full()};
}

std::vector<SelectionStep> AbstractionLevel::Steps() const {
  const SelectionStep lp{Field::kLp, true};
  const SelectionStep path{Field::kPathLen, false};
  const SelectionStep med{Field::kMed, false};
  const SelectionStep rid{Field::kRouterId, false};
  const SelectionStep cost{Field::kCost, false};
  if (protocol_ == Protocol::kOspf) {
    switch (precision_) {
      case Precision::kStar:
        return {};
      case Precision::kFull:
        return {cost, rid};
      default:
        return {cost};
    }
  }
  switch (precision_) {
    case Precision::kStar:
      return {};
    case Precision::kLp:
      return {lp};
    case Precision::kLpPathLen:
      return {lp, path};
    case Precision::kLpPathLenMed:
      return {lp, path, med};
    case Precision::kFull:
      return {lp, path, med, rid};
    case Precision::kPathCost:
      return {cost};
  }
  return {};
}

FieldSet AbstractionLevel::ComparedFields() const {
  FieldSet out;
  for (const SelectionStep& s : Steps()) out.Insert(s.field);
  return out;
}

std::optional<AbstractionLevel> AbstractionLevel::Refined() const {
  std::vector<AbstractionLevel> levels = Hierarchy(protocol_);
  for (size_t i = 0; i + 1 < levels.size(); ++i) {
    if (levels[i] == *this) return levels[i + 1];
  }
  return std::nullopt;
}

std::string AbstractionLevel::ToString() const {
  if (protocol_ == Protocol::kOspf) {
    switch (precision_) {
      case Precision::kStar:
        return "ospf-star";
      case Precision::kFull:
        return "ospf";
      default:
        return "path-cost";
    }
  }
  switch (precision_) {
    case Precision::kStar:
      return "star";
    case Precision::kLp:
      return "lp";
    case Precision::kLpPathLen:
      return "lp-pathlen";
    case Precision::kLpPathLenMed:
      return "lp-pathlen-med";
    case Precision::kFull:
      return "concrete";
    case Precision::kPathCost:
      return "path-cost";
  }
  return "?";
}

absl::string_view OrderingName(Ordering o) {
  switch (o) {
    case Ordering::kLess:
      return "Less";
    case Ordering::kGreater:
      return "Greater";
    case Ordering::kIncomparable:
      return "Incomparable";
    case Ordering::kEqual:
      return "Equal";
  }
  return "?";
}

absl::StatusOr<Ordering> Compare(const AbstractionLevel& level, const Route& a,
                                 const Route& b) {
  if (!a.has_value() || !b.has_value()) {
    if (a.has_value() == b.has_value()) return Ordering::kEqual;
    return a.has_value() ? Ordering::kLess : Ordering::kGreater;
  }
  const std::vector<SelectionStep> steps = level.Steps();
  for (const SelectionStep& step : steps) {
    if (!a->Has(step.field) || !b->Has(step.field)) {
      return absl::FailedPreconditionError(
          absl::StrCat("level ", level.ToString(), " compares field '",
                       FieldName(step.field), "' which the route lacks"));
    }
  }
  if (*a == *b) return Ordering::kEqual;
  for (const SelectionStep& step : steps) {
    const uint64_t x = *a->Get(step.field);
    const uint64_t y = *b->Get(step.field);
    if (x == y) continue;
    const bool a_better = step.prefer_higher ? x > y : x < y;
    return a_better ? Ordering::kLess : Ordering::kGreater;
  }
  return Ordering::kIncomparable;
}

absl::StatusOr<std::vector<Attribute>> MinimalSet(
    const AbstractionLevel& level, const std::vector<Attribute>& routes) {
  std::vector<Attribute> out;
  for (size_t i = 0; i < routes.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < routes.size() && !dominated; ++j) {
      if (i == j) continue;
      ASSIGN_OR_RETURN(Ordering o, Compare(level, routes[j], routes[i]));
      dominated = o == Ordering::kLess;
    }
    if (!dominated) out.push_back(routes[i]);
  }
  return out;
}

}  // namespace acorn
