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

#ifndef ACORN_ATTRIBUTE_H_
#define ACORN_ATTRIBUTE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/strings/string_view.h"
#include "acorn/topology.h"

namespace acorn {

// Route announcement fields that can be tracked symbolically. The AS path
// itself is never a solver variable; it lives only on concrete attributes.
enum class Field : uint8_t {
  kLp = 0,
  kPathLen,
  kComms,
  kMed,
  kRouterId,
  kCost,  // OSPF additive path cost.
};
inline constexpr int kNumFields = 6;

absl::string_view FieldName(Field f);
uint32_t FieldWidth(Field f, int comm_width);

class FieldSet {
 public:
  constexpr FieldSet() = default;
  constexpr FieldSet(std::initializer_list<Field> fields) {
    for (Field f : fields) Insert(f);
  }

  static constexpr FieldSet All() {
    return {Field::kLp,  Field::kPathLen,  Field::kComms,
            Field::kMed, Field::kRouterId, Field::kCost};
  }

  constexpr bool Has(Field f) const { return bits_ & Bit(f); }
  constexpr void Insert(Field f) { bits_ |= Bit(f); }
  constexpr void Erase(Field f) { bits_ &= ~Bit(f); }
  constexpr void InsertAll(FieldSet o) { bits_ |= o.bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool Contains(FieldSet o) const {
    return (bits_ & o.bits_) == o.bits_;
  }
  std::vector<Field> ToVector() const;
  std::string ToString() const;  // "{comms, lp}"

  constexpr bool operator==(const FieldSet&) const = default;

 private:
  static constexpr uint8_t Bit(Field f) {
    return static_cast<uint8_t>(1u << static_cast<int>(f));
  }
  uint8_t bits_ = 0;
};

// Bitmask: one bit per declared tag. Counter: an unsigned integer of
// declared width, saturating at 2^width - 1.
enum class CommMode : uint8_t { kBitmask, kCounter };

struct AttributeSchema {
  FieldSet active = FieldSet::All();
  int comm_width = 1;
  CommMode comm_mode = CommMode::kBitmask;

  bool operator==(const AttributeSchema&) const = default;
};

// A route announcement. Only fields of the active schema are populated.
struct Attribute {
  std::optional<uint32_t> lp;
  std::optional<uint16_t> path_len;
  std::optional<uint32_t> comms;
  std::optional<uint32_t> med;
  std::optional<uint32_t> router_id;
  std::optional<uint32_t> cost;
  // Most recent hop first: the route at u learned via d -> x -> y -> u has
  // as_path [y, x, d].
  std::optional<std::vector<NodeId>> as_path;

  std::optional<uint64_t> Get(Field f) const;
  void Set(Field f, uint64_t value);
  bool Has(Field f) const { return Get(f).has_value(); }

  // Drops every field outside `fields` (as_path is kept).
  Attribute Project(FieldSet fields) const;

  std::string DebugString(const Topology* topo = nullptr) const;

  bool operator==(const Attribute&) const = default;
};

// nullopt is the distinguished NoRoute value (written as infinity in SRP
// notation); it is never represented by a field value.
using Route = std::optional<Attribute>;
inline constexpr std::nullopt_t kNoRoute = std::nullopt;

std::string RouteDebugString(const Route& r, const Topology* topo = nullptr);

}  // namespace acorn

#endif  // ACORN_ATTRIBUTE_H_
