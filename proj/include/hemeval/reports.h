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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hemeval {

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const Prf&) const = default;
};

/// Scores for one caption pair. A disengaged metric was either not requested
/// or undefined for this pair (BERTScore on an empty side).
struct PairScores {
  std::string image_id;
  std::optional<double> bleu;
  std::optional<Prf> rouge_l;
  std::optional<Prf> bertscore;
};

/// Arithmetic means of per-pair scores. Each mean covers the pairs where the
/// metric is defined; the counts record how many.
struct MetricMeans {
  std::size_t pairs = 0;
  std::optional<double> bleu;
  std::optional<Prf> rouge_l;
  std::optional<Prf> bertscore;
  std::size_t bertscore_pairs = 0;
};

struct CorpusScores {
  std::vector<PairScores> pairs;
  MetricMeans means;
};

struct FeatureAccuracy {
  std::string feature;
  std::size_t n = 0;          // samples whose truth defines the feature
  std::size_t correct = 0;    // extraction equals truth
  std::size_t mentioned = 0;  // extraction reports any value
  std::size_t conflicted = 0; // extraction surfaced competing values
  double accuracy_pct = 0.0;
  double mention_rate_pct = 0.0;
  double conflict_rate_pct = 0.0;
};

/// Rows are truth values, columns are extracted values followed by one
/// `unmentioned` column.
struct ConfusionMatrix {
  std::string feature;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> counts;

  std::size_t unmentioned_column() const { return labels.size(); }
  std::size_t total() const;
  std::size_t row_total(std::size_t row) const;
  std::size_t diagonal() const;
};

struct PlausibleErrors {
  std::string feature;
  double rate = 0.0;
  std::size_t plausible_errors = 0;
  std::size_t total_errors = 0;
  bool no_errors = false;
};

struct AttributeReport {
  std::size_t samples = 0;
  std::vector<FeatureAccuracy> features;
  std::vector<ConfusionMatrix> matrices;
  std::vector<PlausibleErrors> plausible;
  /// Truth ids with no extraction; excluded from every denominator.
  std::vector<std::string> missing_extractions;
};

struct ClassMetrics {
  std::string label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct ClassifierReport {
  std::string task;
  std::size_t n = 0;
  double accuracy = 0.0;
  double weighted_f1 = 0.0;
  std::vector<ClassMetrics> classes;
  /// Class order shared by `classes` and both axes of `confusion`
  /// (rows truth, columns prediction).
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> confusion;
};

}  // namespace hemeval
