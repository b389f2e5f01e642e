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

#ifndef ACORN_ABSTRACTION_H_
#define ACORN_ABSTRACTION_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "acorn/attribute.h"

namespace acorn {

enum class Protocol : uint8_t { kBgp, kOspf };

// One step of a lexicographic ranking function.
struct SelectionStep {
  Field field;
  bool prefer_higher;  // lp is maximized; everything else minimized.
};

// A member of the hierarchy of nondeterministic route-choice orders.
//
//   BGP:  star < lp < lp-pathlen < lp-pathlen-med < bgp (full)
//   OSPF: star < path-cost < ospf (full)
//
// Each level compares a prefix of the full decision process; the star level
// compares nothing, so any two distinct routes are incomparable. Because every
// level is a prefix of the next, minimal(B, finer) is a subset of
// minimal(B, coarser) for all finite B.
class AbstractionLevel {
 public:
  enum class Precision : uint8_t {
    kStar,
    kLp,
    kLpPathLen,
    kLpPathLenMed,
    kPathCost,
    kFull,
  };

  constexpr AbstractionLevel() = default;
  constexpr AbstractionLevel(Protocol p, Precision precision)
      : protocol_(p), precision_(precision) {}

  static constexpr AbstractionLevel Star(Protocol p = Protocol::kBgp) {
    return {p, Precision::kStar};
  }
  static constexpr AbstractionLevel Lp() { return {Protocol::kBgp, Precision::kLp}; }
  static constexpr AbstractionLevel LpPathLen() {
    return {Protocol::kBgp, Precision::kLpPathLen};
  }
  static constexpr AbstractionLevel LpPathLenMed() {
    return {Protocol::kBgp, Precision::kLpPathLenMed};
  }
  static constexpr AbstractionLevel PathCost() {
    return {Protocol::kOspf, Precision::kPathCost};
  }
  static constexpr AbstractionLevel Full(Protocol p = Protocol::kBgp) {
    return {p, Precision::kFull};
  }

  // Accepts: star, lp, lp-pathlen, lp-pathlen-med, concrete|bgp,
  // ospf-star, path-cost, ospf.
  static absl::StatusOr<AbstractionLevel> Parse(absl::string_view text);

  // Every level of `protocol`, least precise first.
  static std::vector<AbstractionLevel> Hierarchy(Protocol protocol);

  Protocol protocol() const { return protocol_; }
  Precision precision() const { return precision_; }
  bool IsFull() const { return precision_ == Precision::kFull; }
  bool IsStar() const { return precision_ == Precision::kStar; }

  std::vector<SelectionStep> Steps() const;
  FieldSet ComparedFields() const;

  // The next more precise level, or nullopt at the top of the hierarchy.
  std::optional<AbstractionLevel> Refined() const;

  std::string ToString() const;

  constexpr bool operator==(const AbstractionLevel&) const = default;

 private:
  Protocol protocol_ = Protocol::kBgp;
  Precision precision_ = Precision::kStar;
};

enum class Ordering : uint8_t { kLess, kGreater, kIncomparable, kEqual };

absl::string_view OrderingName(Ordering o);

// kLess means `a` is strictly preferred to `b`. NoRoute is worse than every
// attribute. Attributes identical in every field are kEqual; distinct
// attributes that tie on every compared field are kIncomparable. Fails when
// a compared field is not populated on either operand.
absl::StatusOr<Ordering> Compare(const AbstractionLevel& level, const Route& a,
                                 const Route& b);

// minimal(B) = { a in B | no a' in B with a' != a and a' preferred to a },
// in input order.
absl::StatusOr<std::vector<Attribute>> MinimalSet(
    const AbstractionLevel& level, const std::vector<Attribute>& routes);

}  // namespace acorn

#endif  // ACORN_ABSTRACTION_H_
