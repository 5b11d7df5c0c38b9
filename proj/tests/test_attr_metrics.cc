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

#include <algorithm>
#include <random>

#include "hemeval/attr_metrics.h"
#include "hemeval/error.h"
#include "hemeval/ingest.h"
#include "oracles.h"
#include "support.h"

using namespace hemeval;
using testing_support::default_schema;
using testing_support::fixture_path;

namespace {

AttributeSchema size_schema() {
  return AttributeSchema({AttributeDef{"cell_size", {"small", "medium", "large"},
                                       Applicability::kAll, {}},
                          AttributeDef{"nuclear_chromatin_texture", {"coarse", "open"},
                                       Applicability::kAll, {}}});
}

AttributeRecord truth(std::string id, std::string size, std::string chroma = "coarse") {
  return AttributeRecord{std::move(id), Source::kHealthy,
                         {{"cell_size", std::move(size)},
                          {"nuclear_chromatin_texture", std::move(chroma)}}};
}

ExtractionResult got(std::string id, std::map<std::string, std::string> values) {
  ExtractionResult r;
  r.image_id = std::move(id);
  for (auto& [k, v] : values) r.values[k] = ExtractedValue{v, {}, v};
  return r;
}

void check_conservation(const AttributeReport& report) {
  for (std::size_t f = 0; f < report.features.size(); ++f) {
    const FeatureAccuracy& a = report.features[f];
    const ConfusionMatrix& m = report.matrices[f];
    const PlausibleErrors& p = report.plausible[f];
    CHECK(m.total() == a.n);
    CHECK(m.diagonal() == a.correct);
    CHECK(a.correct + p.total_errors == a.n);
    CHECK(p.plausible_errors <= p.total_errors);
    CHECK(a.accuracy_pct >= 0.0);
    CHECK(a.accuracy_pct <= 100.0);
    if (a.n > 0) {
      CHECK(a.accuracy_pct * static_cast<double>(a.n) / 100.0 +
                static_cast<double>(p.total_errors) ==
            doctest::Approx(static_cast<double>(a.n)).epsilon(1e-12));
    }
  }
}

}  // namespace

TEST_SUITE("attr_metrics") {

TEST_CASE("accuracy counts unmentioned as incorrect") {
  const std::vector<AttributeRecord> t = {truth("a", "small"), truth("b", "medium"),
                                          truth("c", "large")};
  const std::vector<ExtractionResult> e = {got("a", {{"cell_size", "small"}}),
                                           got("b", {{"cell_size", "medium"}}),
                                           got("c", {{"cell_size", "small"}})};
  const auto acc = feature_accuracy(e, t, size_schema());
  CHECK(acc[0].feature == "cell_size");
  CHECK(acc[0].accuracy_pct == doctest::Approx(66.67).epsilon(1e-4));
  CHECK(acc[0].mention_rate_pct == 100.0);
  CHECK(acc[1].accuracy_pct == 0.0);
  CHECK(acc[1].mention_rate_pct == 0.0);
  CHECK(acc[1].n == 3);
}

TEST_CASE("join failures list the unknown ids") {
  try {
    feature_accuracy({got("zz", {}), got("a", {}), got("yy", {})}, {truth("a", "small")},
                     size_schema());
    FAIL("join accepted unknown ids");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()) == "extractions reference ids absent from truth: zz, yy");
  }
  const JoinedSamples j = join_on_image_id({got("a", {})}, {truth("a", "small"), truth("b", "small")});
  CHECK(j.missing_extractions == std::vector<std::string>{"b"});
}

TEST_CASE("confusion matrix shapes") {
  const std::vector<AttributeRecord> t = {truth("a", "small"), truth("b", "medium"),
                                          truth("c", "large")};
  const AttributeSchema schema = size_schema();
  const AttributeDef& def = schema.at("cell_size");
  const auto perfect = confusion_matrix(
      def, {got("a", {{"cell_size", "small"}}), got("b", {{"cell_size", "medium"}}),
            got("c", {{"cell_size", "large"}})},
      t);
  CHECK(perfect.counts == std::vector<std::vector<std::size_t>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  const auto none = confusion_matrix(def, {got("a", {}), got("b", {}), got("c", {})}, t);
  CHECK(none.counts == std::vector<std::vector<std::size_t>>{{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}});
}

TEST_CASE("plausible error rate") {
  const AttributeSchema schema = size_schema();
  PlausibilityMap map = PlausibilityMap::defaults(schema);
  CHECK(map.plausible("nuclear_chromatin_texture", "open", "coarse"));
  CHECK(map.plausible("cell_size", "small", "medium"));
  CHECK_FALSE(map.plausible("cell_size", "small", "large"));
  CHECK_THROWS_AS(map.add(schema, "cell_size", "small", "tiny"), InputError);

  ConfusionMatrix m;
  m.feature = "nuclear_chromatin_texture";
  m.labels = {"coarse", "open"};
  m.counts = {{5, 3, 4}, {1, 7, 2}};
  const PlausibleErrors p = plausible_error_rate(m, map);
  CHECK(p.total_errors == 10);
  CHECK(p.plausible_errors == 4);
  CHECK(p.rate == doctest::Approx(0.4));
  CHECK_FALSE(p.no_errors);

  m.counts = {{5, 0, 0}, {0, 7, 0}};
  const PlausibleErrors z = plausible_error_rate(m, map);
  CHECK(z.rate == 0.0);
  CHECK(z.no_errors);

  const PlausibilityMap loaded = plausibility_from_json(
      parse_json(R"({"cell_size":[["large","medium"]]})", "p"), schema);
  CHECK(loaded.plausible("cell_size", "medium", "large"));
  CHECK(plausibility_to_json(loaded).dump() == R"({"cell_size":[["large","medium"]]})");
}

TEST_CASE("forty-record fixture equals an independent tally") {
  const auto table = load_attribute_table(fixture_path("attr_truth_40.csv"), default_schema());
  const auto extracted = load_extractions(fixture_path("attr_extractions_40.jsonl"));
  const auto report = evaluate_attributes(extracted, table.records, default_schema(),
                                          PlausibilityMap::defaults(default_schema()));
  const auto tally = oracle::tally(extracted, table.records, default_schema());
  REQUIRE(report.features.size() == default_schema().size());
  for (const FeatureAccuracy& f : report.features) {
    const oracle::Tally& t = tally.at(f.feature);
    CHECK(f.n == t.n);
    CHECK(f.correct == t.correct);
    CHECK(f.mentioned == t.mentioned);
    CHECK(f.conflicted == t.conflicted);
    CHECK(f.accuracy_pct == doctest::Approx(100.0 * t.correct / t.n).epsilon(1e-12));
  }
  // Row sums equal per-value truth counts.
  for (const ConfusionMatrix& m : report.matrices) {
    for (std::size_t r = 0; r < m.labels.size(); ++r) {
      std::size_t want = 0;
      for (const auto& rec : table.records) {
        const std::string* v = rec.value(m.feature);
        if (v != nullptr && *v == m.labels[r]) ++want;
      }
      CHECK(m.row_total(r) == want);
    }
  }
  // Plausible errors by enumerating off-diagonal cells directly.
  for (std::size_t f = 0; f < report.matrices.size(); ++f) {
    const ConfusionMatrix& m = report.matrices[f];
    std::size_t plausible = 0, errors = 0;
    for (const auto& ex : extracted) {
      const auto& rec = *std::find_if(table.records.begin(), table.records.end(),
                                      [&](const AttributeRecord& r) { return r.image_id == ex.image_id; });
      const std::string* tv = rec.value(m.feature);
      if (tv == nullptr) continue;
      const ExtractedValue* ev = ex.value(m.feature);
      if (ev != nullptr && ev->value == *tv) continue;
      ++errors;
      if (ev != nullptr && ((*tv == "coarse" && ev->value == "open") || (*tv == "open" && ev->value == "coarse") ||
                            (*tv == "small" && ev->value == "medium") || (*tv == "medium" && ev->value == "small"))) {
        ++plausible;
      }
    }
    CHECK(report.plausible[f].total_errors == errors);
    CHECK(report.plausible[f].plausible_errors == plausible);
  }
  check_conservation(report);
}

TEST_CASE("shuffling joined samples changes no number") {
  const auto table = load_attribute_table(fixture_path("attr_truth_40.csv"), default_schema());
  auto extracted = load_extractions(fixture_path("attr_extractions_40.jsonl"));
  const auto plaus = PlausibilityMap::defaults(default_schema());
  const std::string base =
      attribute_report_to_json(evaluate_attributes(extracted, table.records, default_schema(), plaus)).dump();
  std::mt19937 rng(8);
  auto records = table.records;
  for (int i = 0; i < 10; ++i) {
    std::shuffle(extracted.begin(), extracted.end(), rng);
    std::shuffle(records.begin(), records.end(), rng);
    const AttributeReport r = evaluate_attributes(extracted, records, default_schema(), plaus);
    CHECK(attribute_report_to_json(r).dump() == base);
  }
}

TEST_CASE("variants share one truth record") {
  const std::vector<AttributeRecord> t = {truth("a", "small")};
  const std::vector<ExtractionResult> e = {got("a", {{"cell_size", "small"}}),
                                           got("a", {{"cell_size", "medium"}})};
  const auto acc = feature_accuracy(e, t, size_schema());
  CHECK(acc[0].n == 2);
  CHECK(acc[0].correct == 1);
}

}  // TEST_SUITE
