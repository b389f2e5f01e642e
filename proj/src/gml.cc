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

#include "acorn/gml.h"

#include <algorithm>
#include <map>
#include <memory>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "acorn/benchgen.h"
#include "acorn/status_macros.h"

namespace acorn {
namespace {

// A GML value: number or string scalar, or a bracketed list of key/value
// pairs.
struct GmlValue {
  std::string scalar;
  bool is_string = false;
  std::vector<std::pair<std::string, std::unique_ptr<GmlValue>>> list;
  bool is_list = false;

  const GmlValue* Find(absl::string_view key) const {
    for (const auto& [k, v] : list) {
      if (k == key) return v.get();
    }
    return nullptr;
  }
};

class GmlReader {
 public:
  explicit GmlReader(absl::string_view text) : text_(text) {}

  absl::StatusOr<std::unique_ptr<GmlValue>> ReadDocument() {
    auto root = std::make_unique<GmlValue>();
    root->is_list = true;
    RETURN_IF_ERROR(ReadPairs(*root, /*nested=*/false));
    return root;
  }

 private:
  absl::Status Error(absl::string_view msg) const {
    return absl::InvalidArgumentError(
        absl::StrCat("gml line ", line_, ": ", msg));
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (absl::ascii_isspace(c)) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  absl::string_view Word() {
    const size_t start = pos_;
    while (pos_ < text_.size() && !absl::ascii_isspace(text_[pos_]) &&
           text_[pos_] != '[' && text_[pos_] != ']' && text_[pos_] != '"') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  absl::Status ReadPairs(GmlValue& into, bool nested) {
    while (true) {
      SkipSpace();
      if (pos_ >= text_.size()) {
        if (nested) return Error("unterminated '['");
        return absl::OkStatus();
      }
      if (text_[pos_] == ']') {
        if (!nested) return Error("unexpected ']'");
        ++pos_;
        return absl::OkStatus();
      }
      absl::string_view key = Word();
      if (key.empty()) return Error("expected a key");
      SkipSpace();
      auto value = std::make_unique<GmlValue>();
      RETURN_IF_ERROR(ReadValue(*value));
      into.list.emplace_back(std::string(key), std::move(value));
    }
  }

  absl::Status ReadValue(GmlValue& v) {
    if (pos_ >= text_.size()) return Error("missing value");
    const char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      v.is_list = true;
      return ReadPairs(v, /*nested=*/true);
    }
    if (c == '"') {
      ++pos_;
      const size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\n') ++line_;
        ++pos_;
      }
      if (pos_ >= text_.size()) return Error("unterminated string");
      v.scalar = std::string(text_.substr(start, pos_ - start));
      v.is_string = true;
      ++pos_;
      return absl::OkStatus();
    }
    absl::string_view w = Word();
    if (w.empty()) return Error("missing value");
    v.scalar = std::string(w);
    return absl::OkStatus();
  }

  absl::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
};

std::string Sanitize(absl::string_view label) {
  std::string out;
  for (char c : label) {
    out.push_back(absl::ascii_isalnum(c) || c == '_' || c == '.' ? c : '_');
  }
  if (out.empty() || absl::ascii_isdigit(out[0]) || out[0] == '.') {
    out.insert(out.begin(), 'n');
  }
  return out;
}

}  // namespace

absl::StatusOr<GmlGraph> ParseGml(absl::string_view text) {
  GmlReader reader(text);
  ASSIGN_OR_RETURN(std::unique_ptr<GmlValue> root, reader.ReadDocument());
  const GmlValue* graph = root->Find("graph");
  if (graph == nullptr || !graph->is_list) {
    return absl::InvalidArgumentError("gml: missing graph block");
  }

  GmlGraph out;
  absl::flat_hash_map<std::string, size_t> by_id;
  absl::flat_hash_set<std::string> used_labels;
  for (const auto& [key, value] : graph->list) {
    if (key != "node") continue;
    const GmlValue* id = value->Find("id");
    if (id == nullptr || id->is_list) {
      return absl::InvalidArgumentError("gml: node without id");
    }
    if (by_id.contains(id->scalar)) {
      return absl::InvalidArgumentError(
          absl::StrCat("gml: duplicate node id ", id->scalar));
    }
    const GmlValue* label = value->Find("label");
    std::string name = Sanitize(label != nullptr && !label->is_list
                                    ? label->scalar
                                    : absl::StrCat("n", id->scalar));
    if (used_labels.contains(name)) name = absl::StrCat(name, "_", id->scalar);
    if (!used_labels.insert(name).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("gml: cannot make label unique for node ", id->scalar));
    }
    by_id[id->scalar] = out.labels.size();
    out.labels.push_back(std::move(name));
  }

  std::map<std::pair<size_t, size_t>, size_t> link_index;
  for (const auto& [key, value] : graph->list) {
    if (key != "edge") continue;
    const GmlValue* s = value->Find("source");
    const GmlValue* t = value->Find("target");
    if (s == nullptr || t == nullptr) {
      return absl::InvalidArgumentError("gml: edge without source/target");
    }
    auto si = by_id.find(s->scalar);
    auto ti = by_id.find(t->scalar);
    if (si == by_id.end() || ti == by_id.end()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "gml: edge references unknown node ", s->scalar, " or ", t->scalar));
    }
    if (si->second == ti->second) {
      return absl::InvalidArgumentError(
          absl::StrCat("gml: self-loop on node ", s->scalar));
    }
    GmlGraph::Link link{si->second, ti->second, std::nullopt};
    if (const GmlValue* rel = value->Find("rel"); rel != nullptr) {
      link.rel = ParseEdgeRel(rel->scalar);
      if (!link.rel) {
        return absl::InvalidArgumentError(
            absl::StrCat("gml: unknown rel '", rel->scalar, "'"));
      }
    }
    // Canonical orientation for duplicate detection.
    std::pair<size_t, size_t> key_pair{link.source, link.target};
    std::optional<EdgeRel> canon = link.rel;
    if (key_pair.first > key_pair.second) {
      std::swap(key_pair.first, key_pair.second);
      if (canon) canon = Reverse(*canon);
    }
    if (auto it = link_index.find(key_pair); it != link_index.end()) {
      const GmlGraph::Link& prev = out.links[it->second];
      std::optional<EdgeRel> prev_canon = prev.rel;
      if (prev.source > prev.target && prev_canon) prev_canon = Reverse(*prev_canon);
      if (prev_canon != canon) {
        return absl::InvalidArgumentError(absl::StrCat(
            "gml: conflicting parallel edges between ", s->scalar, " and ",
            t->scalar));
      }
      continue;
    }
    link_index[key_pair] = out.links.size();
    out.links.push_back(link);
  }

  if (const GmlValue* d = graph->Find("dest"); d != nullptr) {
    auto it = by_id.find(d->scalar);
    if (it == by_id.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("gml: dest references unknown node ", d->scalar));
    }
    out.dest = it->second;
  }
  return out;
}

absl::StatusOr<AirModel> IngestGml(absl::string_view text,
                                   std::optional<std::string> dest) {
  ASSIGN_OR_RETURN(GmlGraph g, ParseGml(text));
  if (g.labels.empty()) return absl::InvalidArgumentError("gml: no nodes");

  size_t labeled = 0;
  for (const GmlGraph::Link& l : g.links) labeled += l.rel.has_value();
  if (labeled != 0 && labeled != g.links.size()) {
    return absl::InvalidArgumentError(
        "gml: some edges lack a rel label; label all or none");
  }

  std::vector<Edge> edges;
  std::vector<EdgeRel> rels;
  for (const GmlGraph::Link& l : g.links) {
    edges.push_back({static_cast<NodeId>(l.source), static_cast<NodeId>(l.target)});
    edges.push_back({static_cast<NodeId>(l.target), static_cast<NodeId>(l.source)});
    if (l.rel) {
      rels.push_back(*l.rel);
      rels.push_back(Reverse(*l.rel));
    }
  }
  NodeId d = static_cast<NodeId>(g.dest.value_or(0));
  if (dest) {
    auto it = std::find(g.labels.begin(), g.labels.end(), *dest);
    if (it == g.labels.end()) {
      return absl::NotFoundError(absl::StrCat("gml: no node labeled ", *dest));
    }
    d = static_cast<NodeId>(it - g.labels.begin());
  }

  AirModel model;
  ASSIGN_OR_RETURN(model.topology,
                   Topology::Create(std::move(g.labels), std::move(edges), d));
  if (labeled != 0) {
    ASSIGN_OR_RETURN(model.policy, GaoRexfordPolicy(model.topology, rels));
  } else {
    model.policy.edge_policies.assign(model.topology.num_edges(), EdgePolicy{});
  }
  RETURN_IF_ERROR(ValidatePolicy(model.topology, model.policy));
  model.init = InitialAttribute(model.topology, model.policy.schema);
  return model;
}

std::string WriteGml(const GmlGraph& graph) {
  std::string out = "graph [\n  directed 0\n";
  if (graph.dest) absl::StrAppend(&out, "  dest ", *graph.dest, "\n");
  for (size_t i = 0; i < graph.labels.size(); ++i) {
    absl::StrAppend(&out, "  node [\n    id ", i, "\n    label \"",
                    graph.labels[i], "\"\n  ]\n");
  }
  for (const GmlGraph::Link& l : graph.links) {
    absl::StrAppend(&out, "  edge [\n    source ", l.source, "\n    target ",
                    l.target, "\n");
    if (l.rel) absl::StrAppend(&out, "    rel \"", EdgeRelName(*l.rel), "\"\n");
    absl::StrAppend(&out, "  ]\n");
  }
  absl::StrAppend(&out, "]\n");
  return out;
}

}  // namespace acorn
