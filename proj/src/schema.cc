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

#include "hemeval/schema.h"

#include <algorithm>
#include <set>

#include "hemeval/error.h"

namespace hemeval {
namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

}  // namespace

std::string_view to_string(Source source) {
  return source == Source::kHealthy ? "healthy" : "leukemic";
}

std::string_view to_string(Applicability applicability) {
  switch (applicability) {
    case Applicability::kAll:
      return "all";
    case Applicability::kHealthyOnly:
      return "healthy_only";
    case Applicability::kLeukemicOnly:
      return "leukemic_only";
  }
  return "all";
}

std::optional<Source> parse_source(std::string_view text) {
  if (text == "healthy") return Source::kHealthy;
  if (text == "leukemic") return Source::kLeukemic;
  return std::nullopt;
}

std::optional<Applicability> parse_applicability(std::string_view text) {
  if (text == "all") return Applicability::kAll;
  if (text == "healthy_only") return Applicability::kHealthyOnly;
  if (text == "leukemic_only") return Applicability::kLeukemicOnly;
  return std::nullopt;
}

bool AttributeDef::applies_to(Source source) const {
  switch (applicability) {
    case Applicability::kAll:
      return true;
    case Applicability::kHealthyOnly:
      return source == Source::kHealthy;
    case Applicability::kLeukemicOnly:
      return source == Source::kLeukemic;
  }
  return false;
}

bool AttributeDef::allows(std::string_view value) const {
  return index_of(value) != std::string::npos;
}

bool AttributeDef::allows_for(Source source, std::string_view value) const {
  if (!allows(value)) return false;
  auto it = source_values.find(source);
  if (it == source_values.end()) return true;
  return std::find(it->second.begin(), it->second.end(), value) != it->second.end();
}

std::size_t AttributeDef::index_of(std::string_view value) const {
  auto it = std::find(allowed_values.begin(), allowed_values.end(), value);
  return it == allowed_values.end() ? std::string::npos
                                    : static_cast<std::size_t>(it - allowed_values.begin());
}

AttributeSchema::AttributeSchema(std::vector<AttributeDef> attributes)
    : attributes_(std::move(attributes)) {
  std::set<std::string_view> names;
  for (const AttributeDef& def : attributes_) {
    if (!is_identifier(def.name)) {
      throw InputError("schema: invalid attribute name '" + def.name + "'");
    }
    if (!names.insert(def.name).second) {
      throw InputError("schema: duplicate attribute '" + def.name + "'");
    }
    if (def.allowed_values.empty()) {
      throw InputError("schema: attribute '" + def.name + "' has no allowed_values");
    }
    std::set<std::string_view> values;
    for (const std::string& v : def.allowed_values) {
      if (!is_identifier(v)) {
        throw InputError("schema: attribute '" + def.name + "' has invalid value '" + v + "'");
      }
      if (!values.insert(v).second) {
        throw InputError("schema: attribute '" + def.name + "' repeats value '" + v + "'");
      }
    }
    for (const auto& [source, restricted] : def.source_values) {
      if (!def.applies_to(source)) {
        throw InputError("schema: attribute '" + def.name + "' restricts values for " +
                         std::string(to_string(source)) + " but does not apply to it");
      }
      for (const std::string& v : restricted) {
        if (!def.allows(v)) {
          throw InputError("schema: attribute '" + def.name + "' source_values lists '" + v +
                           "' outside allowed_values");
        }
      }
    }
  }
}

const AttributeDef* AttributeSchema::find(std::string_view name) const {
  for (const AttributeDef& def : attributes_) {
    if (def.name == name) return &def;
  }
  return nullptr;
}

const AttributeDef& AttributeSchema::at(std::string_view name) const {
  const AttributeDef* def = find(name);
  if (def == nullptr) throw InputError("unknown attribute '" + std::string(name) + "'");
  return *def;
}

const std::vector<std::string>& required_default_attributes() {
  static const std::vector<std::string> names = {
      "cell_type",       "diagnosis",        "cell_size",
      "nuclear_shape",   "overall_shape",    "nuclear_chromatin_texture",
      "cytoplasm_amount", "nucleoli_visibility", "basophilia"};
  return names;
}

}  // namespace hemeval
