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


#include <doctest.h>

#include "hemeval/config_io.h"
#include "hemeval/error.h"
#include "hemeval/ingest.h"
#include "support.h"

using namespace hemeval;
using testing_support::default_schema;
using testing_support::fixture_path;

namespace {

const std::string kHeader =
    "image_id,source,cell_type,diagnosis,cell_size,overall_shape,nuclear_shape,"
    "nuclear_chromatin_texture,cytoplasm_amount,nucleoli_visibility,basophilia,granularity,"
    "cytoplasm_vacuole\n";

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("valid row is accepted") {
  const auto t = parse_attribute_table(
      kHeader + "h1,healthy,lymphocyte,healthy,small,round,round,coarse,scant,,,agranular,absent\n",
      default_schema());
  REQUIRE(t.records.size() == 1);
  CHECK(t.rejects.empty());
  CHECK(*t.records[0].value("cell_size") == "small");
  CHECK(t.records[0].value("basophilia") == nullptr);
}

TEST_CASE("out-of-vocabulary value is rejected with its attribute") {
  const auto t = parse_attribute_table(
      kHeader + "h1,healthy,lymphocyte,healthy,small,round,round,purple,scant,,,agranular,absent\n",
      default_schema());
  CHECK(t.records.empty());
  REQUIRE(t.rejects.size() == 1);
  CHECK(t.rejects[0].reason == "invalid value for nuclear_chromatin_texture");
  CHECK(t.rejects[0].row == 1);
}

TEST_CASE("ten-row fixture: seven records and three rejects") {
  const auto t = load_attribute_table(fixture_path("attributes_10.csv"), default_schema());
  CHECK(t.records.size() == 7);
  REQUIRE(t.rejects.size() == 3);
  CHECK(t.rejects[0] == RowReject{4, "h04", "invalid value for nuclear_chromatin_texture"});
  CHECK(t.rejects[1] == RowReject{7, "l03", "malformed row: expected 13 fields, got 11"});
  CHECK(t.rejects[2] == RowReject{8, "l04", "missing value for nucleoli_visibility"});
  std::vector<std::string> ids;
  for (const auto& r : t.records) ids.push_back(r.image_id);
  CHECK(ids == std::vector<std::string>{"h01", "h02", "h03", "l01", "l02", "l05", "h05"});
}

TEST_CASE("accepted and rejected rows partition the input") {
  const auto t = load_attribute_table(fixture_path("attr_truth_40.csv"), default_schema());
  CHECK(t.records.size() + t.rejects.size() == 40);
  CHECK(t.rejects.empty());
  const auto again = load_attribute_table(fixture_path("attr_truth_40.csv"), default_schema());
  CHECK(again.records == t.records);
}

TEST_CASE("duplicate ids keep the first row") {
  const std::string row = "h1,healthy,lymphocyte,healthy,small,round,round,coarse,scant,,,agranular,absent\n";
  const auto t = parse_attribute_table(kHeader + row + row, default_schema());
  CHECK(t.records.size() == 1);
  REQUIRE(t.rejects.size() == 1);
  CHECK(t.rejects[0].reason == "duplicate id");
  CHECK(t.rejects[0].row == 2);
}

TEST_CASE("missing required column is fatal") {
  CHECK(error_of([] { parse_attribute_table("image_id,source\nh1,healthy\n", default_schema()); }) ==
        "attribute table: missing required column cell_type");
  CHECK_THROWS_AS(load_attribute_table(fixture_path("no_such_file.csv"), default_schema()),
                  IoError);
}

TEST_CASE("csv quoting, CRLF and BOM") {
  const auto rows = parse_csv("\xEF\xBB\xBF" "a,\"b,c\",\"d\"\"e\"\r\n1,2,3\r\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"a", "b,c", "d\"e"});
  CHECK(rows[1] == std::vector<std::string>{"1", "2", "3"});
  CHECK_THROWS_AS(parse_csv("a,\"b\n"), InputError);
}

TEST_CASE("caption pairs") {
  const auto one = parse_caption_pairs(R"({"image_id":"c1","reference":"a","candidate":"a"})");
  REQUIRE(one.size() == 1);
  CHECK(one[0].reference == one[0].candidate);
  CHECK(parse_caption_pairs("").empty());
  const auto ws = parse_caption_pairs(
      "{\"image_id\":\"c1\",\"reference\":\"  a   b \",\"candidate\":\"a\\tb\"}\n");
  CHECK(ws[0].reference == "a b");
  CHECK(ws[0].candidate == "a b");
  CHECK(error_of([] { load_caption_pairs(fixture_path("pairs_5_missing.jsonl")); }) ==
        "line 3: missing field candidate");
  CHECK(load_caption_pairs(fixture_path("pairs_20.jsonl")).size() == 20);
}

TEST_CASE("embeddings") {
  const auto set = parse_embeddings(
      "{\"id\":\"a\",\"vector\":[1,0,0,0]}\n{\"id\":\"b\",\"vector\":[0,1,0,0]}\n");
  CHECK(set.size() == 2);
  CHECK(set.dim() == 4);
  CHECK(error_of([] {
          parse_embeddings("{\"id\":\"a\",\"vector\":[1,0,0,0]}\n{\"id\":\"b\",\"vector\":[0,1,0]}\n");
        }).find("id b") != std::string::npos);
  CHECK_THROWS_AS(parse_embeddings("{\"id\":\"a\",\"vector\":[NaN,0]}\n"), InputError);
  CHECK_THROWS_AS(parse_embeddings("{\"id\":\"a\",\"vector\":[1e400,0]}\n"), InputError);
  const auto labelled = parse_embeddings(
      "{\"id\":\"a\",\"vector\":[1,0],\"labels\":{\"diagnosis\":\"CLL\"}}\n");
  CHECK(labelled.label("diagnosis") == std::vector<std::string>{"CLL"});

  const auto fixture = load_embeddings(fixture_path("embeddings.jsonl"));
  CHECK(fixture.size() == 36);
  CHECK(fixture.dim() == 8);
  CHECK_THROWS_AS(parse_embeddings("{\"comment\":\"x\",\"dim\":3}\n{\"id\":\"a\",\"vector\":[1,0]}\n"),
                  InputError);
}

TEST_CASE("captions and extractions") {
  const auto caps = parse_captions(
      "{\"image_id\":\"a\",\"variant_index\":2,\"text\":\"x\"}\n{\"image_id\":\"b\",\"text\":\"y\"}\n");
  REQUIRE(caps.size() == 2);
  CHECK(caps[0].variant_index == 2);
  CHECK_FALSE(caps[1].variant_index.has_value());
  const auto ex = load_extractions(fixture_path("attr_extractions_40.jsonl"));
  CHECK(ex.size() == 40);
}

}  // TEST_SUITE
