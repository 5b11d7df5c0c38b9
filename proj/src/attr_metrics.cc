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

#include "hemeval/attr_metrics.h"

#include <algorithm>
#include <unordered_map>

#include "hemeval/error.h"

namespace hemeval {
namespace {

double percent(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

std::size_t ConfusionMatrix::total() const {
  std::size_t t = 0;
  for (std::size_t r = 0; r < counts.size(); ++r) t += row_total(r);
  return t;
}

std::size_t ConfusionMatrix::row_total(std::size_t row) const {
  std::size_t t = 0;
  for (std::size_t c : counts[row]) t += c;
  return t;
}

std::size_t ConfusionMatrix::diagonal() const {
  std::size_t t = 0;
  for (std::size_t r = 0; r < counts.size(); ++r) t += counts[r][r];
  return t;
}

void PlausibilityMap::add(const AttributeSchema& schema, const std::string& attribute,
                          const std::string& a, const std::string& b) {
  const AttributeDef* def = schema.find(attribute);
  if (def == nullptr) throw InputError("plausibility: unknown attribute " + attribute);
  for (const std::string& v : {a, b}) {
    if (!def->allows(v)) {
      throw InputError("plausibility: '" + v + "' is not a value of " + attribute);
    }
  }
  if (a == b) throw InputError("plausibility: pair " + a + "/" + b + " is not an error");
  pairs_[attribute].insert(ordered(a, b));
}

bool PlausibilityMap::plausible(const std::string& attribute, const std::string& a,
                                const std::string& b) const {
  auto it = pairs_.find(attribute);
  return it != pairs_.end() && it->second.count(ordered(a, b)) != 0;
}

PlausibilityMap PlausibilityMap::defaults(const AttributeSchema& schema) {
  PlausibilityMap map;
  auto add_if_present = [&](const std::string& attr, const std::string& a, const std::string& b) {
    const AttributeDef* def = schema.find(attr);
    if (def != nullptr && def->allows(a) && def->allows(b)) map.add(schema, attr, a, b);
  };
  add_if_present("nuclear_chromatin_texture", "coarse", "open");
  add_if_present("cell_size", "small", "medium");
  return map;
}

PlausibilityMap plausibility_from_json(const Json& doc, const AttributeSchema& schema) {
  if (!doc.is_object()) throw InputError("plausibility: expected an object");
  PlausibilityMap map;
  for (const auto& [attr, list] : doc.items()) {
    if (!list.is_array()) throw InputError("plausibility: " + attr + " must list pairs");
    for (const Json& pair : list) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        throw InputError("plausibility: " + attr + " entries must be [value, value]");
      }
      map.add(schema, attr, pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  return map;
}

PlausibilityMap load_plausibility(const std::filesystem::path& path,
                                  const AttributeSchema& schema) {
  return plausibility_from_json(parse_json(read_file(path), path.string()), schema);
}

Json plausibility_to_json(const PlausibilityMap& map) {
  Json doc = Json::object();
  for (const auto& [attr, pairs] : map.pairs()) {
    Json list = Json::array();
    for (const auto& [a, b] : pairs) list.push_back(Json::array({a, b}));
    doc[attr] = std::move(list);
  }
  return doc;
}

JoinedSamples join_on_image_id(const std::vector<ExtractionResult>& extracted,
                               const std::vector<AttributeRecord>& truth) {
  std::unordered_map<std::string, const AttributeRecord*> by_id;
  for (const AttributeRecord& r : truth) by_id.emplace(r.image_id, &r);
  JoinedSamples joined;
  std::vector<std::string> unknown;
  std::unordered_map<std::string, bool> covered;
  for (const ExtractionResult& e : extracted) {
    auto it = by_id.find(e.image_id);
    if (it == by_id.end()) {
      unknown.push_back(e.image_id);
      continue;
    }
    covered[e.image_id] = true;
    joined.samples.emplace_back(&e, it->second);
  }
  if (!unknown.empty()) {
    std::string ids;
    for (std::size_t i = 0; i < unknown.size(); ++i) ids += (i ? ", " : "") + unknown[i];
    throw InputError("extractions reference ids absent from truth: " + ids);
  }
  for (const AttributeRecord& r : truth) {
    if (!covered.count(r.image_id)) joined.missing_extractions.push_back(r.image_id);
  }
  return joined;
}

std::vector<FeatureAccuracy> feature_accuracy(const std::vector<ExtractionResult>& extracted,
                                              const std::vector<AttributeRecord>& truth,
                                              const AttributeSchema& schema) {
  const JoinedSamples joined = join_on_image_id(extracted, truth);
  std::vector<FeatureAccuracy> out;
  for (const AttributeDef& def : schema.attributes()) {
    FeatureAccuracy f;
    f.feature = def.name;
    for (const auto& [ext, rec] : joined.samples) {
      const std::string* t = rec->value(def.name);
      if (t == nullptr) continue;
      ++f.n;
      const ExtractedValue* got = ext->value(def.name);
      if (got != nullptr) {
        ++f.mentioned;
        if (got->value == *t) ++f.correct;
      }
      if (ext->conflict(def.name) != nullptr) ++f.conflicted;
    }
    f.accuracy_pct = percent(f.correct, f.n);
    f.mention_rate_pct = percent(f.mentioned, f.n);
    f.conflict_rate_pct = percent(f.conflicted, f.n);
    out.push_back(std::move(f));
  }
  return out;
}

ConfusionMatrix confusion_matrix(const AttributeDef& feature,
                                 const std::vector<ExtractionResult>& extracted,
                                 const std::vector<AttributeRecord>& truth) {
  const JoinedSamples joined = join_on_image_id(extracted, truth);
  ConfusionMatrix m;
  m.feature = feature.name;
  m.labels = feature.allowed_values;
  m.counts.assign(m.labels.size(), std::vector<std::size_t>(m.labels.size() + 1, 0));
  for (const auto& [ext, rec] : joined.samples) {
    const std::string* t = rec->value(feature.name);
    if (t == nullptr) continue;
    const std::size_t row = feature.index_of(*t);
    if (row == std::string::npos) {
      throw InputError("truth value '" + *t + "' is not allowed for " + feature.name);
    }
    const ExtractedValue* got = ext->value(feature.name);
    std::size_t col = m.unmentioned_column();
    if (got != nullptr) {
      col = feature.index_of(got->value);
      if (col == std::string::npos) {
        throw InputError("extracted value '" + got->value + "' is not allowed for " +
                         feature.name);
      }
    }
    ++m.counts[row][col];
  }
  return m;
}

PlausibleErrors plausible_error_rate(const ConfusionMatrix& matrix,
                                     const PlausibilityMap& plausibility) {
  PlausibleErrors out;
  out.feature = matrix.feature;
  for (std::size_t r = 0; r < matrix.counts.size(); ++r) {
    for (std::size_t c = 0; c < matrix.counts[r].size(); ++c) {
      if (c == r) continue;
      const std::size_t n = matrix.counts[r][c];
      out.total_errors += n;
      if (c != matrix.unmentioned_column() &&
          plausibility.plausible(matrix.feature, matrix.labels[r], matrix.labels[c])) {
        out.plausible_errors += n;
      }
    }
  }
  out.no_errors = out.total_errors == 0;
  out.rate = out.no_errors ? 0.0
                           : static_cast<double>(out.plausible_errors) /
                                 static_cast<double>(out.total_errors);
  return out;
}

AttributeReport evaluate_attributes(const std::vector<ExtractionResult>& extracted,
                                    const std::vector<AttributeRecord>& truth,
                                    const AttributeSchema& schema,
                                    const PlausibilityMap& plausibility) {
  AttributeReport report;
  const JoinedSamples joined = join_on_image_id(extracted, truth);
  report.samples = joined.samples.size();
  report.missing_extractions = joined.missing_extractions;
  report.features = feature_accuracy(extracted, truth, schema);
  for (const AttributeDef& def : schema.attributes()) {
    report.matrices.push_back(confusion_matrix(def, extracted, truth));
    report.plausible.push_back(plausible_error_rate(report.matrices.back(), plausibility));
  }
  return report;
}

Json attribute_report_to_json(const AttributeReport& report) {
  Json features = Json::array();
  for (const FeatureAccuracy& f : report.features) {
    features.push_back(Json{{"feature", f.feature},
                            {"n", f.n},
                            {"correct", f.correct},
                            {"mentioned", f.mentioned},
                            {"conflicted", f.conflicted},
                            {"accuracy_pct", f.accuracy_pct},
                            {"mention_rate_pct", f.mention_rate_pct},
                            {"conflict_rate_pct", f.conflict_rate_pct}});
  }
  Json matrices = Json::array();
  for (const ConfusionMatrix& m : report.matrices) {
    Json columns = m.labels;
    columns.push_back("unmentioned");
    matrices.push_back(Json{{"feature", m.feature},
                            {"rows", m.labels},
                            {"columns", std::move(columns)},
                            {"counts", m.counts},
                            {"total", m.total()}});
  }
  Json plausible = Json::array();
  for (const PlausibleErrors& p : report.plausible) {
    plausible.push_back(Json{{"feature", p.feature},
                             {"plausible_error_rate", p.rate},
                             {"plausible_errors", p.plausible_errors},
                             {"total_errors", p.total_errors},
                             {"no_errors", p.no_errors}});
  }
  Json j;
  j["samples"] = report.samples;
  j["missing_extractions"] = report.missing_extractions;
  j["features"] = std::move(features);
  j["confusion_matrices"] = std::move(matrices);
  j["plausible_errors"] = std::move(plausible);
  return j;
}

}  // namespace hemeval
