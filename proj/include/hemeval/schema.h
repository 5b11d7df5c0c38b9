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

namespace hemeval {

/// Which cell population a record comes from.
enum class Source { kHealthy, kLeukemic };

/// Which sources an attribute is annotated for.
enum class Applicability { kAll, kHealthyOnly, kLeukemicOnly };

std::string_view to_string(Source source);
std::string_view to_string(Applicability applicability);
std::optional<Source> parse_source(std::string_view text);
std::optional<Applicability> parse_applicability(std::string_view text);

/// One categorical attribute with a closed vocabulary of snake_case values.
///
/// `source_values` optionally narrows the vocabulary per source, e.g. the
/// diagnosis of a healthy cell can only be `healthy`.
struct AttributeDef {
  std::string name;
  std::vector<std::string> allowed_values;
  Applicability applicability = Applicability::kAll;
  std::map<Source, std::vector<std::string>> source_values;

  bool applies_to(Source source) const;
  bool allows(std::string_view value) const;
  bool allows_for(Source source, std::string_view value) const;
  /// Position of `value` in allowed_values, or npos.
  std::size_t index_of(std::string_view value) const;

  bool operator==(const AttributeDef&) const = default;
};

/// Ordered attribute list. Immutable once constructed.
class AttributeSchema {
 public:
  AttributeSchema() = default;
  /// Throws InputError on duplicate names, empty or repeated values, or
  /// source restrictions outside allowed_values.
  explicit AttributeSchema(std::vector<AttributeDef> attributes);

  const std::vector<AttributeDef>& attributes() const { return attributes_; }
  std::size_t size() const { return attributes_.size(); }
  const AttributeDef* find(std::string_view name) const;
  /// Like find() but throws InputError for unknown names.
  const AttributeDef& at(std::string_view name) const;

  bool operator==(const AttributeSchema&) const = default;

 private:
  std::vector<AttributeDef> attributes_;
};

/// Attribute names every default schema must define.
const std::vector<std::string>& required_default_attributes();

/// Names of attributes that identify the cell rather than describe it.
inline bool is_label_attribute(std::string_view name) {
  return name == "cell_type" || name == "diagnosis";
}

}  // namespace hemeval
