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

#include "hemeval/ingest.h"

#include <cmath>
#include <functional>
#include <map>
#include <unordered_set>

#include "hemeval/config_io.h"
#include "hemeval/error.h"
#include "hemeval/normalize.h"

namespace hemeval {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

std::string line_prefix(std::size_t line) { return "line " + std::to_string(line) + ": "; }

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

// Calls fn(line_number, parsed_object) for each non-blank line.
void for_each_json_line(std::string_view jsonl,
                        const std::function<void(std::size_t, const Json&)>& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < jsonl.size()) {
    std::size_t nl = jsonl.find('\n', pos);
    if (nl == std::string_view::npos) nl = jsonl.size();
    const std::string_view line = jsonl.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (is_blank(line)) continue;
    Json obj;
    try {
      obj = Json::parse(line.begin(), line.end());
    } catch (const nlohmann::json::out_of_range&) {
      throw InputError(line_prefix(line_no) + "non-finite number (overflow)");
    } catch (const nlohmann::json::parse_error&) {
      if (line.find("NaN") != std::string_view::npos ||
          line.find("Infinity") != std::string_view::npos) {
        throw InputError(line_prefix(line_no) + "non-finite number (NaN/Infinity)");
      }
      throw InputError(line_prefix(line_no) + "invalid JSON");
    }
    if (!obj.is_object()) throw InputError(line_prefix(line_no) + "expected a JSON object");
    fn(line_no, obj);
  }
}

std::string string_field(const Json& obj, std::string_view key, std::size_t line) {
  if (!obj.contains(key)) {
    throw InputError(line_prefix(line) + "missing field " + std::string(key));
  }
  const Json& v = obj.at(std::string(key));
  if (!v.is_string()) {
    throw InputError(line_prefix(line) + "field " + std::string(key) + " must be a string");
  }
  return v.get<std::string>();
}

std::optional<long long> variant_field(const Json& obj, std::size_t line) {
  if (!obj.contains("variant_index") || obj.at("variant_index").is_null()) return std::nullopt;
  const Json& v = obj.at("variant_index");
  if (!v.is_number_integer()) {
    throw InputError(line_prefix(line) + "field variant_index must be an integer");
  }
  return v.get<long long>();
}

}  // namespace

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool row_has_content = false;
  std::size_t i = 0;
  auto end_row = [&] {
    row.push_back(std::move(field));
    field.clear();
    if (row_has_content || row.size() > 1 || !row.front().empty()) rows.push_back(std::move(row));
    row.clear();
    row_has_content = false;
  };
  // UTF-8 byte order mark.
  if (text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        row_has_content = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        end_row();
        break;
      case '\n':
        end_row();
        break;
      default:
        field.push_back(c);
    }
  }
  if (in_quotes) throw InputError("csv: unterminated quoted field");
  if (!field.empty() || !row.empty() || row_has_content) end_row();
  return rows;
}

AttributeTable parse_attribute_table(std::string_view csv, const AttributeSchema& schema) {
  const auto rows = parse_csv(csv);
  if (rows.empty()) throw InputError("attribute table: missing header row");
  std::map<std::string, std::size_t> column;
  for (std::size_t c = 0; c < rows[0].size(); ++c) column.emplace(trim(rows[0][c]), c);
  auto require = [&](const std::string& name) {
    auto it = column.find(name);
    if (it == column.end()) throw InputError("attribute table: missing required column " + name);
    return it->second;
  };
  const std::size_t id_col = require("image_id");
  const std::size_t source_col = require("source");
  std::vector<std::size_t> attr_cols;
  for (const AttributeDef& def : schema.attributes()) attr_cols.push_back(require(def.name));

  AttributeTable table;
  std::unordered_set<std::string> seen;
  const std::size_t width = rows[0].size();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& fields = rows[r];
    std::string id = fields.size() > id_col ? trim(fields[id_col]) : std::string();
    auto reject = [&](std::string reason) {
      table.rejects.push_back({r, id, std::move(reason)});
    };
    if (fields.size() != width) {
      reject("malformed row: expected " + std::to_string(width) + " fields, got " +
             std::to_string(fields.size()));
      if (!id.empty()) seen.insert(id);
      continue;
    }
    if (id.empty()) {
      reject("missing image_id");
      continue;
    }
    if (!seen.insert(id).second) {
      reject("duplicate id");
      continue;
    }
    const auto source = parse_source(trim(fields[source_col]));
    if (!source) {
      reject("invalid source");
      continue;
    }
    AttributeRecord record{id, *source, {}};
    for (std::size_t a = 0; a < attr_cols.size(); ++a) {
      std::string v = trim(fields[attr_cols[a]]);
      if (!v.empty()) record.values.emplace(schema.attributes()[a].name, std::move(v));
    }
    if (auto violation = record_violation(record, schema)) {
      reject(*violation);
      continue;
    }
    table.records.push_back(std::move(record));
  }
  return table;
}

AttributeTable load_attribute_table(const std::filesystem::path& path,
                                    const AttributeSchema& schema) {
  return parse_attribute_table(read_file(path), schema);
}

std::vector<CaptionPair> parse_caption_pairs(std::string_view jsonl) {
  std::vector<CaptionPair> pairs;
  for_each_json_line(jsonl, [&](std::size_t line, const Json& obj) {
    CaptionPair p;
    p.image_id = string_field(obj, "image_id", line);
    p.reference = collapse_whitespace(string_field(obj, "reference", line));
    p.candidate = collapse_whitespace(string_field(obj, "candidate", line));
    if (p.reference.empty()) throw InputError(line_prefix(line) + "empty reference");
    if (p.candidate.empty()) throw InputError(line_prefix(line) + "empty candidate");
    pairs.push_back(std::move(p));
  });
  return pairs;
}

std::vector<CaptionPair> load_caption_pairs(const std::filesystem::path& path) {
  return parse_caption_pairs(read_file(path));
}

std::vector<Caption> parse_captions(std::string_view jsonl) {
  std::vector<Caption> captions;
  for_each_json_line(jsonl, [&](std::size_t line, const Json& obj) {
    Caption c;
    c.image_id = string_field(obj, "image_id", line);
    c.variant_index = variant_field(obj, line);
    c.text = string_field(obj, "text", line);
    captions.push_back(std::move(c));
  });
  return captions;
}

std::vector<Caption> load_captions(const std::filesystem::path& path) {
  return parse_captions(read_file(path));
}

std::vector<ExtractionResult> parse_extractions(std::string_view jsonl) {
  std::vector<ExtractionResult> out;
  for_each_json_line(jsonl, [&](std::size_t line, const Json& obj) {
    ExtractionResult r;
    r.image_id = string_field(obj, "image_id", line);
    r.variant_index = variant_field(obj, line);
    if (!obj.contains("values") || !obj.at("values").is_object()) {
      throw InputError(line_prefix(line) + "missing field values");
    }
    const Json* spans = obj.contains("spans") ? &obj.at("spans") : nullptr;
    for (const auto& [attr, v] : obj.at("values").items()) {
      if (!v.is_string()) {
        throw InputError(line_prefix(line) + "values." + attr + " must be a string");
      }
      ExtractedValue ev;
      ev.value = v.get<std::string>();
      if (spans != nullptr && spans->contains(attr)) {
        const Json& s = spans->at(attr);
        ev.span.begin = s.value("begin", std::size_t{0});
        ev.span.end = s.value("end", std::size_t{0});
        ev.pattern = s.value("pattern", std::string());
      }
      r.values.emplace(attr, std::move(ev));
    }
    if (obj.contains("conflicts")) {
      const Json& cs = obj.at("conflicts");
      if (!cs.is_array()) throw InputError(line_prefix(line) + "conflicts must be an array");
      for (const Json& c : cs) {
        Conflict conflict;
        conflict.attribute = string_field(c, "attribute", line);
        if (!c.contains("values") || !c.at("values").is_array()) {
          throw InputError(line_prefix(line) + "conflict values must be an array");
        }
        for (const Json& v : c.at("values")) conflict.values.push_back(v.get<std::string>());
        r.conflicts.push_back(std::move(conflict));
      }
    }
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<ExtractionResult> load_extractions(const std::filesystem::path& path) {
  return parse_extractions(read_file(path));
}

EmbeddingSet parse_embeddings(std::string_view jsonl) {
  std::vector<std::string> ids;
  std::vector<std::vector<double>> vectors;
  std::map<std::string, std::vector<std::string>> labels;
  std::optional<std::size_t> declared_dim;
  for_each_json_line(jsonl, [&](std::size_t line, const Json& obj) {
    if (!obj.contains("id") && obj.contains("comment")) {
      if (obj.contains("dim")) {
        if (!obj.at("dim").is_number_unsigned()) {
          throw InputError(line_prefix(line) + "header dim must be a non-negative integer");
        }
        declared_dim = obj.at("dim").get<std::size_t>();
      }
      return;
    }
    std::string id = string_field(obj, "id", line);
    if (!obj.contains("vector") || !obj.at("vector").is_array()) {
      throw InputError(line_prefix(line) + "missing field vector");
    }
    std::vector<double> vec;
    for (const Json& x : obj.at("vector")) {
      if (!x.is_number()) {
        throw InputError(line_prefix(line) + "non-numeric component in id " + id);
      }
      const double v = x.get<double>();
      if (!std::isfinite(v)) {
        throw InputError(line_prefix(line) + "non-finite component in id " + id);
      }
      vec.push_back(v);
    }
    const std::size_t expected = declared_dim ? *declared_dim
                                 : vectors.empty() ? vec.size()
                                                   : vectors.front().size();
    if (vec.size() != expected) {
      throw InputError(line_prefix(line) + "dimension mismatch for id " + id + ": expected " +
                       std::to_string(expected) + ", got " + std::to_string(vec.size()));
    }
    const std::size_t index = ids.size();
    if (obj.contains("labels")) {
      const Json& ls = obj.at("labels");
      if (!ls.is_object()) throw InputError(line_prefix(line) + "labels must be an object");
      for (const auto& [name, cls] : ls.items()) {
        if (!cls.is_string() || cls.get<std::string>().empty()) {
          throw InputError(line_prefix(line) + "label " + name + " must be a non-empty string");
        }
        auto& column = labels[name];
        column.resize(index);
        column.push_back(cls.get<std::string>());
      }
    }
    ids.push_back(std::move(id));
    vectors.push_back(std::move(vec));
  });
  for (auto& [name, column] : labels) column.resize(ids.size());
  return EmbeddingSet(std::move(ids), std::move(vectors), std::move(labels));
}

EmbeddingSet load_embeddings(const std::filesystem::path& path) {
  return parse_embeddings(read_file(path));
}

}  // namespace hemeval
