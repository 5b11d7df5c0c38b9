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

// Cosine nearest-prototype probe over frozen embeddings.
//
// A class prototype is the L2-normalized mean of the class's L2-normalized
// member vectors. Prediction picks the prototype with the highest cosine;
// exact ties go to the lexicographically smallest class id.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hemeval/config_io.h"
#include "hemeval/records.h"
#include "hemeval/reports.h"

namespace hemeval {

using Prototypes = std::map<std::string, std::vector<double>>;

/// Stratified split. Each class contributes round(test_fraction * size)
/// members to the test side, clamped to [1, size - 1]. Members are drawn by a
/// Fisher-Yates shuffle seeded with mix_seed(seed, class_id, 0). Both sides
/// keep input order.
std::pair<EmbeddingSet, EmbeddingSet> split(const EmbeddingSet& set, std::string_view label,
                                            double test_fraction, std::uint64_t seed);

/// Throws InputError naming the id of a zero-norm member.
Prototypes fit_prototypes(const EmbeddingSet& train, std::string_view label);

struct Prediction {
  std::string label;
  std::map<std::string, double> scores;
};

/// Throws InputError on a zero-norm or mis-sized query.
Prediction predict(const std::vector<double>& vector, const Prototypes& prototypes);

/// Accuracy, per-class precision/recall/F1 (0 when undefined) and weighted
/// F1 over the union of test and prototype classes. Throws on an empty set.
ClassifierReport evaluate(const EmbeddingSet& test, const Prototypes& prototypes,
                          std::string_view label);

/// Report from parallel truth/prediction lists over `labels` (sorted, must
/// contain every value in both lists).
ClassifierReport classification_report(std::string task, const std::vector<std::string>& truth,
                                       const std::vector<std::string>& predicted,
                                       std::vector<std::string> labels);

Json classifier_report_to_json(const ClassifierReport& report);

}  // namespace hemeval
