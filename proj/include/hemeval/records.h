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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hemeval/schema.h"

namespace hemeval {

/// Ground-truth attributes of one cell image. Non-applicable attributes are
/// simply absent from `values`.
struct AttributeRecord {
  std::string image_id;
  Source source = Source::kHealthy;
  std::map<std::string, std::string> values;

  const std::string* value(std::string_view attribute) const;

  bool operator==(const AttributeRecord&) const = default;
};

/// First constraint `record` violates against `schema`, if any.
std::optional<std::string> record_violation(const AttributeRecord& record,
                                            const AttributeSchema& schema);

struct CaptionPair {
  std::string image_id;
  std::string reference;
  std::string candidate;

  bool operator==(const CaptionPair&) const = default;
};

/// Byte offsets [begin, end) into the original caption.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

struct ExtractedValue {
  std::string value;
  Span span;
  std::string pattern;

  bool operator==(const ExtractedValue&) const = default;
};

/// Distinct values whose patterns all matched one attribute, schema order.
struct Conflict {
  std::string attribute;
  std::vector<std::string> values;

  bool operator==(const Conflict&) const = default;
};

struct ExtractionResult {
  std::string image_id;
  std::optional<long long> variant_index;
  std::map<std::string, ExtractedValue> values;
  std::vector<Conflict> conflicts;

  const ExtractedValue* value(std::string_view attribute) const;
  const Conflict* conflict(std::string_view attribute) const;

  bool operator==(const ExtractionResult&) const = default;
};

/// Frozen image embeddings with per-item class labels.
///
/// A missing label is stored as an empty string; operations that need the
/// label reject it.
class EmbeddingSet {
 public:
  EmbeddingSet() = default;
  /// Throws InputError on length mismatch, ragged dimensions or non-finite
  /// components.
  EmbeddingSet(std::vector<std::string> ids,
               std::vector<std::vector<double>> vectors,
               std::map<std::string, std::vector<std::string>> labels);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::size_t dim() const { return vectors_.empty() ? 0 : vectors_.front().size(); }

  const std::vector<std::string>& ids() const { return ids_; }
  const std::vector<std::vector<double>>& vectors() const { return vectors_; }
  const std::map<std::string, std::vector<std::string>>& labels() const { return labels_; }

  /// Labels for `name`; throws InputError if absent or incomplete.
  const std::vector<std::string>& label(std::string_view name) const;

  /// Items at `indices`, in the given order.
  EmbeddingSet subset(const std::vector<std::size_t>& indices) const;

  bool operator==(const EmbeddingSet&) const = default;

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<double>> vectors_;
  std::map<std::string, std::vector<std::string>> labels_;
};

}  // namespace hemeval
