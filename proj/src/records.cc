// Copyright 2026 The hemeval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hemeval/records.h"

#include <cmath>

#include "hemeval/error.h"

namespace hemeval {

const std::string* AttributeRecord::value(std::string_view attribute) const {
  auto it = values.find(std::string(attribute));
  return it == values.end() ? nullptr : &it->second;
}

std::optional<std::string> record_violation(const AttributeRecord& record,
                                            const AttributeSchema& schema) {
  if (record.image_id.empty()) return "missing image_id";
  for (const auto& [name, v] : record.values) {
    if (schema.find(name) == nullptr) return "unknown attribute " + name;
  }
  for (const AttributeDef& def : schema.attributes()) {
    const std::string* v = record.value(def.name);
    if (!def.applies_to(record.source)) {
      if (v != nullptr) return "value for non-applicable attribute " + def.name;
      continue;
    }
    if (v == nullptr || v->empty()) return "missing value for " + def.name;
    if (!def.allows(*v)) return "invalid value for " + def.name;
    if (!def.allows_for(record.source, *v)) {
      return "value not allowed for " + std::string(to_string(record.source)) + " cells: " +
             def.name;
    }
  }
  return std::nullopt;
}

const ExtractedValue* ExtractionResult::value(std::string_view attribute) const {
  auto it = values.find(std::string(attribute));
  return it == values.end() ? nullptr : &it->second;
}

const Conflict* ExtractionResult::conflict(std::string_view attribute) const {
  for (const Conflict& c : conflicts) {
    if (c.attribute == attribute) return &c;
  }
  return nullptr;
}

EmbeddingSet::EmbeddingSet(std::vector<std::string> ids,
                           std::vector<std::vector<double>> vectors,
                           std::map<std::string, std::vector<std::string>> labels)
    : ids_(std::move(ids)), vectors_(std::move(vectors)), labels_(std::move(labels)) {
  if (ids_.size() != vectors_.size()) {
    throw InputError("embeddings: " + std::to_string(ids_.size()) + " ids but " +
                     std::to_string(vectors_.size()) + " vectors");
  }
  for (const auto& [name, values] : labels_) {
    if (values.size() != ids_.size()) {
      throw InputError("embeddings: label '" + name + "' has " + std::to_string(values.size()) +
                       " entries, expected " + std::to_string(ids_.size()));
    }
  }
  const std::size_t d = dim();
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (vectors_[i].size() != d) {
      throw InputError("embeddings: dimension mismatch for id " + ids_[i] + ": expected " +
                       std::to_string(d) + ", got " + std::to_string(vectors_[i].size()));
    }
    for (double x : vectors_[i]) {
      if (!std::isfinite(x)) {
        throw InputError("embeddings: non-finite component in id " + ids_[i]);
      }
    }
  }
}

const std::vector<std::string>& EmbeddingSet::label(std::string_view name) const {
  auto it = labels_.find(std::string(name));
  if (it == labels_.end()) {
    throw InputError("embeddings: no label '" + std::string(name) + "'");
  }
  for (std::size_t i = 0; i < it->second.size(); ++i) {
    if (it->second[i].empty()) {
      throw InputError("embeddings: id " + ids_[i] + " lacks label '" + std::string(name) + "'");
    }
  }
  return it->second;
}

EmbeddingSet EmbeddingSet::subset(const std::vector<std::size_t>& indices) const {
  std::vector<std::string> ids;
  std::vector<std::vector<double>> vectors;
  std::map<std::string, std::vector<std::string>> labels;
  ids.reserve(indices.size());
  vectors.reserve(indices.size());
  for (std::size_t i : indices) {
    ids.push_back(ids_.at(i));
    vectors.push_back(vectors_.at(i));
  }
  for (const auto& [name, values] : labels_) {
    auto& out = labels[name];
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back(values[i]);
  }
  return EmbeddingSet(std::move(ids), std::move(vectors), std::move(labels));
}

}  // namespace hemeval
