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

// JSON file forms of the schema and lexicon.
//
// Schema:
//   {"attributes": [{"name": "cell_size",
//                    "allowed_values": ["small", "medium", "large"],
//                    "applicability": "all",
//                    "source_values": {"healthy": [...]}}]}   // optional
//
// Lexicon:
//   {"attributes": [{"name": "cell_size",
//                    "patterns": {"small": ["small", "small-sized"], ...},
//                    "canonical": {"small": "small"}}]}         // optional
//
// A `canonical` phrase is moved to the front of its pattern list (and added
// if missing). Without one the first pattern is canonical.

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hemeval/lexicon.h"
#include "hemeval/schema.h"

namespace hemeval {

using Json = nlohmann::ordered_json;

/// Whole file as bytes; throws IoError.
std::string read_file(const std::filesystem::path& path);
/// Writes bytes, creating parent directories; throws IoError.
void write_file(const std::filesystem::path& path, std::string_view bytes);
/// Parses a JSON document; throws InputError naming `what` on syntax errors.
Json parse_json(std::string_view text, std::string_view what);

AttributeSchema schema_from_json(const Json& doc);
Json schema_to_json(const AttributeSchema& schema);
AttributeSchema load_schema(const std::filesystem::path& path);

/// Parses without validating against a schema.
Lexicon lexicon_from_json(const Json& doc);
Json lexicon_to_json(const Lexicon& lexicon);
/// Loads and runs validate_lexicon() against `schema`.
Lexicon load_lexicon(const std::filesystem::path& path, const AttributeSchema& schema);

/// Pretty-printed JSON text with a trailing newline.
std::string dump_pretty(const Json& doc);

}  // namespace hemeval
