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


// Shared helpers for the unit tests.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hemeval/config_io.h"
#include "hemeval/lexicon.h"
#include "hemeval/records.h"
#include "hemeval/schema.h"
#include "hemeval/seed.h"

namespace testing_support {

inline std::filesystem::path data_path(const std::string& file) {
  return std::filesystem::path(HEMEVAL_DATA_DIR) / file;
}

inline std::filesystem::path fixture_path(const std::string& file) {
  return std::filesystem::path(HEMEVAL_SOURCE_DIR) / "tests" / "data" / file;
}

inline std::filesystem::path golden_path(const std::string& file) {
  return std::filesystem::path(HEMEVAL_SOURCE_DIR) / "tests" / "golden" / file;
}

inline const hemeval::AttributeSchema& default_schema() {
  static const hemeval::AttributeSchema schema =
      hemeval::load_schema(data_path("default_schema.json"));
  return schema;
}

inline const hemeval::Lexicon& default_lexicon() {
  static const hemeval::Lexicon lexicon =
      hemeval::load_lexicon(data_path("default_lexicon.json"), default_schema());
  return lexicon;
}

/// Unique scratch directory under the system temp dir, emptied on creation.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("hemeval_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

/// Valid record for `source` with every applicable attribute drawn from the
/// values the schema allows for that source.
inline hemeval::AttributeRecord random_record(const hemeval::AttributeSchema& schema,
                                              hemeval::SplitMix64& rng, std::string image_id,
                                              hemeval::Source source) {
  hemeval::AttributeRecord r{std::move(image_id), source, {}};
  for (const hemeval::AttributeDef& def : schema.attributes()) {
    if (!def.applies_to(source)) continue;
    auto it = def.source_values.find(source);
    const auto& pool = it == def.source_values.end() ? def.allowed_values : it->second;
    r.values[def.name] = pool[rng.below(pool.size())];
  }
  return r;
}

/// `n` records alternating healthy and leukemic. The first records walk
/// through every allowed value of every attribute so the corpus spans the
/// whole schema.
inline std::vector<hemeval::AttributeRecord> spanning_records(
    const hemeval::AttributeSchema& schema, std::size_t n, std::uint64_t seed) {
  hemeval::SplitMix64 rng(seed);
  std::vector<hemeval::AttributeRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto source = i % 2 == 0 ? hemeval::Source::kHealthy : hemeval::Source::kLeukemic;
    hemeval::AttributeRecord r = random_record(schema, rng, "r" + std::to_string(i), source);
    for (const hemeval::AttributeDef& def : schema.attributes()) {
      if (!def.applies_to(source)) continue;
      const std::string& v = def.allowed_values[(i / 2) % def.allowed_values.size()];
      if (def.allows_for(source, v)) r.values[def.name] = v;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace testing_support
