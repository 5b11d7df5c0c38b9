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

// Loaders for attribute tables (CSV), caption pairs, captions, extractions
// and embeddings (JSON-Lines).
//
// Every loader has a parse_* twin that works on in-memory bytes; the load_*
// functions only add file reading. Loading is a pure function of the bytes.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hemeval/records.h"
#include "hemeval/schema.h"

namespace hemeval {

/// RFC 4180 CSV: comma separated, double-quote escaping, LF or CRLF rows.
/// Throws InputError on an unterminated quoted field.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

struct RowReject {
  std::size_t row = 0;  // 1-based data row, header excluded
  std::string image_id;
  std::string reason;

  bool operator==(const RowReject&) const = default;
};

struct AttributeTable {
  std::vector<AttributeRecord> records;
  std::vector<RowReject> rejects;
};

/// Applies the filtering step: a row is kept only if every applicable
/// attribute has an allowed value. Each reject carries the first violated
/// constraint. Throws InputError for a missing required column.
AttributeTable parse_attribute_table(std::string_view csv, const AttributeSchema& schema);
AttributeTable load_attribute_table(const std::filesystem::path& path,
                                    const AttributeSchema& schema);

/// JSONL of {"image_id", "reference", "candidate"}; texts are
/// whitespace-collapsed. Throws InputError "line N: missing field X".
std::vector<CaptionPair> parse_caption_pairs(std::string_view jsonl);
std::vector<CaptionPair> load_caption_pairs(const std::filesystem::path& path);

/// One caption per line: {"image_id", "text"} with optional "variant_index".
struct Caption {
  std::string image_id;
  std::optional<long long> variant_index;
  std::string text;

  bool operator==(const Caption&) const = default;
};

std::vector<Caption> parse_captions(std::string_view jsonl);
std::vector<Caption> load_captions(const std::filesystem::path& path);

/// Extraction JSONL as written by the `extract` subcommand.
std::vector<ExtractionResult> parse_extractions(std::string_view jsonl);
std::vector<ExtractionResult> load_extractions(const std::filesystem::path& path);

/// JSONL of {"id", "vector": [...], "labels": {"name": "class"}}. A line
/// without "id" that carries "comment" is a header; its optional "dim" is
/// enforced. Throws InputError naming the offending id on dimension mismatch
/// or non-finite components.
EmbeddingSet parse_embeddings(std::string_view jsonl);
EmbeddingSet load_embeddings(const std::filesystem::path& path);

}  // namespace hemeval
