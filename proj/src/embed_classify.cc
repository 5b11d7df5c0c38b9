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

#include "hemeval/embed_classify.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "hemeval/error.h"
#include "hemeval/parallel.h"
#include "hemeval/seed.h"

namespace hemeval {
namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

std::pair<EmbeddingSet, EmbeddingSet> split(const EmbeddingSet& set, std::string_view label,
                                            double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw InputError("split: test_fraction must lie in (0, 1)");
  }
  const auto& labels = set.label(label);
  std::map<std::string, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < labels.size(); ++i) members[labels[i]].push_back(i);

  std::vector<bool> is_test(set.size(), false);
  for (auto& [cls, idx] : members) {
    if (idx.size() < 2) throw InputError("split: class " + cls + " has fewer than 2 members");
    SplitMix64 rng(mix_seed(seed, cls, 0));
    for (std::size_t i = idx.size() - 1; i > 0; --i) {
      std::swap(idx[i], idx[rng.below(i + 1)]);
    }
    const double want = std::round(test_fraction * static_cast<double>(idx.size()));
    const std::size_t take =
        std::clamp<std::size_t>(static_cast<std::size_t>(want), 1, idx.size() - 1);
    for (std::size_t k = 0; k < take; ++k) is_test[idx[k]] = true;
  }
  std::vector<std::size_t> train, test;
  for (std::size_t i = 0; i < set.size(); ++i) (is_test[i] ? test : train).push_back(i);
  return {set.subset(train), set.subset(test)};
}

Prototypes fit_prototypes(const EmbeddingSet& train, std::string_view label) {
  const auto& labels = train.label(label);
  std::map<std::string, std::vector<double>> sums;
  for (std::size_t i = 0; i < train.size(); ++i) {
    const auto& v = train.vectors()[i];
    const double n = norm2(v);
    if (n == 0.0) throw InputError("fit_prototypes: zero-norm vector for id " + train.ids()[i]);
    auto& sum = sums[labels[i]];
    sum.resize(v.size(), 0.0);
    for (std::size_t k = 0; k < v.size(); ++k) sum[k] += v[k] / n;
  }
  Prototypes prototypes;
  for (auto& [cls, sum] : sums) {
    const double n = norm2(sum);
    if (n == 0.0) throw InputError("fit_prototypes: class " + cls + " has a zero mean direction");
    for (double& x : sum) x /= n;
    prototypes.emplace(cls, std::move(sum));
  }
  if (prototypes.empty()) throw InputError("fit_prototypes: no training vectors");
  return prototypes;
}

Prediction predict(const std::vector<double>& vector, const Prototypes& prototypes) {
  if (prototypes.empty()) throw InputError("predict: no prototypes");
  const double n = norm2(vector);
  if (n == 0.0 || !std::isfinite(n)) throw InputError("predict: zero-norm or non-finite query");
  Prediction out;
  double best = -2.0;
  for (const auto& [cls, proto] : prototypes) {
    if (proto.size() != vector.size()) {
      throw InputError("predict: query dimension " + std::to_string(vector.size()) +
                       " does not match prototype dimension " + std::to_string(proto.size()));
    }
    double s = 0.0;
    for (std::size_t k = 0; k < proto.size(); ++k) s += proto[k] * (vector[k] / n);
    out.scores.emplace(cls, s);
    // Strict comparison keeps the smallest id on ties (map order).
    if (s > best) {
      best = s;
      out.label = cls;
    }
  }
  return out;
}

ClassifierReport classification_report(std::string task, const std::vector<std::string>& truth,
                                       const std::vector<std::string>& predicted,
                                       std::vector<std::string> labels) {
  if (truth.empty()) throw InputError("evaluate: empty test set");
  if (truth.size() != predicted.size()) throw InputError("evaluate: truth/prediction mismatch");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  auto at = [&](const std::string& cls) {
    auto it = index.find(cls);
    if (it == index.end()) throw InputError("evaluate: unknown class " + cls);
    return it->second;
  };
  ClassifierReport report;
  report.task = std::move(task);
  report.n = truth.size();
  report.confusion.assign(labels.size(), std::vector<std::size_t>(labels.size(), 0));
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    ++report.confusion[at(truth[i])][at(predicted[i])];
    if (truth[i] == predicted[i]) ++correct;
  }
  const double n = static_cast<double>(report.n);
  report.accuracy = static_cast<double>(correct) / n;
  for (std::size_t c = 0; c < labels.size(); ++c) {
    std::size_t tp = report.confusion[c][c], support = 0, predicted_c = 0;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      support += report.confusion[c][k];
      predicted_c += report.confusion[k][c];
    }
    ClassMetrics m;
    m.label = labels[c];
    m.support = support;
    m.precision =
        predicted_c == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(predicted_c);
    m.recall = support == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(support);
    m.f1 = m.precision + m.recall > 0.0 ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                                        : 0.0;
    report.weighted_f1 += static_cast<double>(support) / n * m.f1;
    report.classes.push_back(std::move(m));
  }
  report.labels = std::move(labels);
  return report;
}

ClassifierReport evaluate(const EmbeddingSet& test, const Prototypes& prototypes,
                          std::string_view label) {
  if (test.empty()) throw InputError("evaluate: empty test set");
  const auto& truth = test.label(label);
  std::vector<std::string> predicted(test.size());
  parallel_for(test.size(), [&](std::size_t i) {
    predicted[i] = predict(test.vectors()[i], prototypes).label;
  });
  std::set<std::string> classes(truth.begin(), truth.end());
  for (const auto& [cls, proto] : prototypes) classes.insert(cls);
  return classification_report(std::string(label), truth, predicted,
                               std::vector<std::string>(classes.begin(), classes.end()));
}

Json classifier_report_to_json(const ClassifierReport& report) {
  Json classes = Json::array();
  for (const ClassMetrics& m : report.classes) {
    classes.push_back(Json{{"label", m.label},
                           {"precision", m.precision},
                           {"recall", m.recall},
                           {"f1", m.f1},
                           {"support", m.support}});
  }
  Json j;
  j["task"] = report.task;
  j["n"] = report.n;
  j["accuracy"] = report.accuracy;
  j["weighted_f1"] = report.weighted_f1;
  j["classes"] = std::move(classes);
  j["labels"] = report.labels;
  j["confusion"] = report.confusion;
  return j;
}

}  // namespace hemeval
