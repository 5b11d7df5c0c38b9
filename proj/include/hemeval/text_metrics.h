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

// Sentence-level caption metrics: BLEU, ROUGE-L and greedy-matching
// BERTScore over an abstract token embedding provider.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hemeval/config_io.h"
#include "hemeval/error.h"
#include "hemeval/records.h"
#include "hemeval/reports.h"

namespace hemeval {

/// Normalized word tokens. Only tokenize() creates non-empty sequences, so
/// a TokenSequence never holds an empty token.
class TokenSequence {
 public:
  TokenSequence() = default;

  const std::vector<std::string>& tokens() const& { return tokens_; }
  std::vector<std::string> tokens() && { return std::move(tokens_); }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }

  bool operator==(const TokenSequence&) const = default;

 private:
  friend TokenSequence tokenize(std::string_view text);
  std::vector<std::string> tokens_;
};

TokenSequence tokenize(std::string_view text);

enum class Smoothing { kNone, kEpsilon };

std::string_view to_string(Smoothing smoothing);

/// Clipped n-gram precision geometric mean times the brevity penalty
/// exp(min(0, 1 - |ref|/|cand|)).
///
/// Zero for an empty candidate or when no unigram matches. With epsilon
/// smoothing a zero precision of order n becomes 1/(2 * max(1, T_n)), T_n
/// being the candidate's n-gram count of that order; without smoothing any
/// zero precision gives a score of zero.
double bleu(const TokenSequence& candidate, const TokenSequence& reference,
            std::size_t max_n = 4, Smoothing smoothing = Smoothing::kEpsilon);

/// LCS-based precision, recall and F1 (beta = 1). All zero if either side is
/// empty.
Prf rouge_l(const TokenSequence& candidate, const TokenSequence& reference);

/// Source of unit-norm token embeddings.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  /// One unit vector of dimension dim() per token.
  virtual std::vector<std::vector<double>> embed(const TokenSequence& tokens) const = 0;
  virtual std::size_t dim() const = 0;
  /// Short description recorded in report metadata.
  virtual std::string describe() const = 0;
  /// False if embed() must not be called concurrently.
  virtual bool thread_safe() const { return true; }
};

/// Standard basis vector per vocabulary token: similarity is 1 for identical
/// tokens and 0 otherwise. Unknown tokens raise InputError.
class OneHotProvider : public EmbeddingProvider {
 public:
  explicit OneHotProvider(std::vector<std::string> vocabulary);

  std::vector<std::vector<double>> embed(const TokenSequence& tokens) const override;
  std::size_t dim() const override { return index_.size(); }
  std::string describe() const override { return "one_hot"; }

  /// Vocabulary of every token in the pairs' references and candidates.
  static OneHotProvider for_pairs(const std::vector<CaptionPair>& pairs);

 private:
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Pseudo-random unit vector per token, a pure function of (seed, token).
class HashedProvider : public EmbeddingProvider {
 public:
  explicit HashedProvider(std::uint64_t seed, std::size_t dim = 64);

  std::vector<std::vector<double>> embed(const TokenSequence& tokens) const override;
  std::size_t dim() const override { return dim_; }
  std::string describe() const override;

  std::vector<double> vector_for(std::string_view token) const;

 private:
  std::uint64_t seed_;
  std::size_t dim_;
};

/// Token vectors read from JSONL lines {"token": "...", "vector": [...]}.
/// Vectors are rescaled to unit norm. Unknown tokens map to `<unk>` when the
/// file provides it and raise InputError otherwise.
class FileProvider : public EmbeddingProvider {
 public:
  static FileProvider parse(std::string_view jsonl, std::string description = "file");
  static FileProvider load(const std::filesystem::path& path);

  std::vector<std::vector<double>> embed(const TokenSequence& tokens) const override;
  std::size_t dim() const override { return dim_; }
  std::string describe() const override { return description_; }
  std::size_t vocabulary_size() const { return vectors_.size(); }

 private:
  std::map<std::string, std::vector<double>, std::less<>> vectors_;
  std::size_t dim_ = 0;
  std::string description_;
};

/// Provider from a CLI spec: `one_hot`, `hashed:<seed>` or `file:<path>`.
/// `one_hot` draws its vocabulary from `pairs`.
std::unique_ptr<EmbeddingProvider> make_provider(std::string_view spec,
                                                 const std::vector<CaptionPair>& pairs);

/// Raised when BERTScore is asked to score an empty side.
class UndefinedScoreError : public Error {
 public:
  using Error::Error;
};

/// Greedy max-cosine matching without idf weighting or baseline rescaling.
/// Precision and recall are clamped to [0, 1].
Prf bert_score(const TokenSequence& candidate, const TokenSequence& reference,
               const EmbeddingProvider& provider);

struct MetricOptions {
  bool bleu = true;
  bool rouge_l = true;
  bool bertscore = true;
  std::size_t bleu_max_n = 4;
  Smoothing smoothing = Smoothing::kEpsilon;
};

/// Per-pair scores in input order plus sentence-level means. `provider` may
/// be null when BERTScore is disabled.
CorpusScores corpus_scores(const std::vector<CaptionPair>& pairs,
                           const EmbeddingProvider* provider, const MetricOptions& options);

Json pair_scores_to_json(const PairScores& scores);
Json metric_means_to_json(const MetricMeans& means);

}  // namespace hemeval
