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

// Feature-level faithfulness of extracted attributes against ground truth.
//
// Extractions join to truth records on image_id; several extractions may
// share one truth record (caption variants). An extraction whose id has no
// truth record is an error. Truth records without any extraction are listed
// in AttributeReport::missing_extractions and excluded from every count.
//
// An unmentioned feature counts as incorrect. A conflicted extraction is
// correct only if its tie-broken value equals the truth.

#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hemeval/config_io.h"
#include "hemeval/records.h"
#include "hemeval/reports.h"
#include "hemeval/schema.h"

namespace hemeval {

/// Per attribute, unordered value pairs counted as biologically plausible
/// confusions. Pairs are stored with the smaller value first.
class PlausibilityMap {
 public:
  PlausibilityMap() = default;

  /// Throws InputError if the attribute or either value is not in `schema`.
  void add(const AttributeSchema& schema, const std::string& attribute, const std::string& a,
           const std::string& b);
  bool plausible(const std::string& attribute, const std::string& a, const std::string& b) const;
  const std::map<std::string, std::set<std::pair<std::string, std::string>>>& pairs() const {
    return pairs_;
  }

  /// coarse<->open chromatin and small<->medium cell size, where the schema
  /// has them.
  static PlausibilityMap defaults(const AttributeSchema& schema);

 private:
  std::map<std::string, std::set<std::pair<std::string, std::string>>> pairs_;
};

/// {"cell_size": [["small", "medium"]], ...}
PlausibilityMap plausibility_from_json(const Json& doc, const AttributeSchema& schema);
PlausibilityMap load_plausibility(const std::filesystem::path& path,
                                  const AttributeSchema& schema);
Json plausibility_to_json(const PlausibilityMap& map);

/// Extractions paired with their truth record.
struct JoinedSamples {
  std::vector<std::pair<const ExtractionResult*, const AttributeRecord*>> samples;
  std::vector<std::string> missing_extractions;
};

/// Throws InputError listing every extraction id absent from `truth`.
JoinedSamples join_on_image_id(const std::vector<ExtractionResult>& extracted,
                               const std::vector<AttributeRecord>& truth);

std::vector<FeatureAccuracy> feature_accuracy(const std::vector<ExtractionResult>& extracted,
                                              const std::vector<AttributeRecord>& truth,
                                              const AttributeSchema& schema);

ConfusionMatrix confusion_matrix(const AttributeDef& feature,
                                 const std::vector<ExtractionResult>& extracted,
                                 const std::vector<AttributeRecord>& truth);

/// Off-diagonal cells are errors; an error is plausible if its (truth,
/// extracted) pair is in the map. The unmentioned column is never plausible.
PlausibleErrors plausible_error_rate(const ConfusionMatrix& matrix,
                                     const PlausibilityMap& plausibility);

/// All three analyses for every schema attribute.
AttributeReport evaluate_attributes(const std::vector<ExtractionResult>& extracted,
                                    const std::vector<AttributeRecord>& truth,
                                    const AttributeSchema& schema,
                                    const PlausibilityMap& plausibility);

Json attribute_report_to_json(const AttributeReport& report);

}  // namespace hemeval
