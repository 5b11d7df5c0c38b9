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

#include "hemeval/config_io.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "hemeval/error.h"

namespace hemeval {
namespace {

const Json& require(const Json& obj, std::string_view key, std::string_view context) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(std::string(context) + ": missing field " + std::string(key));
  }
  return obj.at(std::string(key));
}

std::vector<std::string> string_list(const Json& arr, std::string_view context) {
  if (!arr.is_array()) throw InputError(std::string(context) + ": expected an array of strings");
  std::vector<std::string> out;
  for (const Json& v : arr) {
    if (!v.is_string()) throw InputError(std::string(context) + ": expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

AttributeSchema schema_from_json(const Json& doc) {
  const Json& attrs = require(doc, "attributes", "schema");
  if (!attrs.is_array()) throw InputError("schema: attributes must be an array");
  std::vector<AttributeDef> defs;
  for (const Json& a : attrs) {
    AttributeDef def;
    const Json& name = require(a, "name", "schema attribute");
    if (!name.is_string()) throw InputError("schema: attribute name must be a string");
    def.name = name.get<std::string>();
    const std::string ctx = "schema attribute " + def.name;
    def.allowed_values = string_list(require(a, "allowed_values", ctx), ctx);
    if (a.contains("applicability")) {
      const Json& ap = a.at("applicability");
      auto parsed = ap.is_string() ? parse_applicability(ap.get<std::string>()) : std::nullopt;
      if (!parsed) throw InputError(ctx + ": invalid applicability");
      def.applicability = *parsed;
    }
    if (a.contains("source_values")) {
      const Json& sv = a.at("source_values");
      if (!sv.is_object()) throw InputError(ctx + ": source_values must be an object");
      for (const auto& [key, list] : sv.items()) {
        auto source = parse_source(key);
        if (!source) throw InputError(ctx + ": unknown source '" + key + "'");
        def.source_values[*source] = string_list(list, ctx);
      }
    }
    defs.push_back(std::move(def));
  }
  return AttributeSchema(std::move(defs));
}

Json schema_to_json(const AttributeSchema& schema) {
  Json attrs = Json::array();
  for (const AttributeDef& def : schema.attributes()) {
    Json a;
    a["name"] = def.name;
    a["allowed_values"] = def.allowed_values;
    a["applicability"] = std::string(to_string(def.applicability));
    if (!def.source_values.empty()) {
      Json sv = Json::object();
      for (const auto& [source, values] : def.source_values) {
        sv[std::string(to_string(source))] = values;
      }
      a["source_values"] = std::move(sv);
    }
    attrs.push_back(std::move(a));
  }
  Json doc;
  doc["attributes"] = std::move(attrs);
  return doc;
}

AttributeSchema load_schema(const std::filesystem::path& path) {
  return schema_from_json(parse_json(read_file(path), path.string()));
}

Lexicon lexicon_from_json(const Json& doc) {
  const Json& attrs = require(doc, "attributes", "lexicon");
  if (!attrs.is_array()) throw InputError("lexicon: attributes must be an array");
  std::vector<LexiconAttribute> out;
  for (const Json& a : attrs) {
    LexiconAttribute attr;
    const Json& name = require(a, "name", "lexicon attribute");
    if (!name.is_string()) throw InputError("lexicon: attribute name must be a string");
    attr.name = name.get<std::string>();
    const std::string ctx = "lexicon attribute " + attr.name;
    const Json& patterns = require(a, "patterns", ctx);
    if (!patterns.is_object()) throw InputError(ctx + ": patterns must be an object");
    for (const auto& [value, list] : patterns.items()) {
      LexiconEntry entry{value, string_list(list, ctx + "." + value)};
      if (a.contains("canonical") && a.at("canonical").contains(value)) {
        const Json& c = a.at("canonical").at(value);
        if (!c.is_string()) throw InputError(ctx + ": canonical phrases must be strings");
        const std::string canon = c.get<std::string>();
        auto it = std::find(entry.patterns.begin(), entry.patterns.end(), canon);
        if (it != entry.patterns.end()) entry.patterns.erase(it);
        entry.patterns.insert(entry.patterns.begin(), canon);
      }
      attr.entries.push_back(std::move(entry));
    }
    if (a.contains("canonical")) {
      const Json& c = a.at("canonical");
      if (!c.is_object()) throw InputError(ctx + ": canonical must be an object");
      for (const auto& [value, phrase] : c.items()) {
        if (attr.find(value) == nullptr) {
          throw InputError(ctx + ": canonical phrase for unknown value '" + value + "'");
        }
      }
    }
    out.push_back(std::move(attr));
  }
  return Lexicon(std::move(out));
}

Json lexicon_to_json(const Lexicon& lexicon) {
  Json attrs = Json::array();
  for (const LexiconAttribute& attr : lexicon.attributes()) {
    Json patterns = Json::object();
    Json canonical = Json::object();
    for (const LexiconEntry& e : attr.entries) {
      patterns[e.value] = e.patterns;
      if (!e.patterns.empty()) canonical[e.value] = e.canonical();
    }
    Json a;
    a["name"] = attr.name;
    a["patterns"] = std::move(patterns);
    a["canonical"] = std::move(canonical);
    attrs.push_back(std::move(a));
  }
  Json doc;
  doc["attributes"] = std::move(attrs);
  return doc;
}

Lexicon load_lexicon(const std::filesystem::path& path, const AttributeSchema& schema) {
  Lexicon lexicon = lexicon_from_json(parse_json(read_file(path), path.string()));
  validate_lexicon(lexicon, schema);
  return lexicon;
}

std::string dump_pretty(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace hemeval
