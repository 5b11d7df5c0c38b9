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

#include "hemeval/text_metrics.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "hemeval/normalize.h"
#include "hemeval/parallel.h"
#include "hemeval/seed.h"

namespace hemeval {
namespace {

using NgramCounts = std::unordered_map<std::string, std::size_t>;

NgramCounts count_ngrams(const TokenSequence& seq, std::size_t n) {
  NgramCounts counts;
  if (seq.size() < n) return counts;
  for (std::size_t i = 0; i + n <= seq.size(); ++i) {
    std::string key;
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) key.push_back('\x1f');
      key += seq[i + k];
    }
    ++counts[key];
  }
  return counts;
}

std::vector<double> unit(std::vector<double> v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (norm == 0.0 || !std::isfinite(norm)) return {};
  for (double& x : v) x /= norm;
  return v;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double harmonic(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

TokenSequence tokenize(std::string_view text) {
  TokenSequence seq;
  seq.tokens_ = normalized_tokens(text);
  return seq;
}

std::string_view to_string(Smoothing smoothing) {
  return smoothing == Smoothing::kNone ? "none" : "epsilon";
}

double bleu(const TokenSequence& candidate, const TokenSequence& reference, std::size_t max_n,
            Smoothing smoothing) {
  if (max_n == 0) throw InputError("bleu: max_n must be at least 1");
  if (candidate.empty()) return 0.0;
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const NgramCounts cand = count_ngrams(candidate, n);
    const NgramCounts ref = count_ngrams(reference, n);
    std::size_t total = candidate.size() >= n ? candidate.size() - n + 1 : 0;
    std::size_t matched = 0;
    for (const auto& [gram, count] : cand) {
      auto it = ref.find(gram);
      if (it != ref.end()) matched += std::min(count, it->second);
    }
    if (n == 1 && matched == 0) return 0.0;
    double precision;
    if (matched > 0) {
      precision = static_cast<double>(matched) / static_cast<double>(total);
    } else if (smoothing == Smoothing::kEpsilon) {
      precision = 1.0 / (2.0 * static_cast<double>(std::max<std::size_t>(1, total)));
    } else {
      return 0.0;
    }
    log_sum += std::log(precision);
  }
  const double ratio =
      static_cast<double>(reference.size()) / static_cast<double>(candidate.size());
  const double brevity = std::exp(std::min(0.0, 1.0 - ratio));
  return std::clamp(brevity * std::exp(log_sum / static_cast<double>(max_n)), 0.0, 1.0);
}

Prf rouge_l(const TokenSequence& candidate, const TokenSequence& reference) {
  if (candidate.empty() || reference.empty()) return {};
  std::vector<std::size_t> prev(reference.size() + 1, 0), cur(reference.size() + 1, 0);
  for (std::size_t i = 1; i <= candidate.size(); ++i) {
    for (std::size_t j = 1; j <= reference.size(); ++j) {
      cur[j] = candidate[i - 1] == reference[j - 1] ? prev[j - 1] + 1
                                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  const double lcs = static_cast<double>(prev[reference.size()]);
  const double p = lcs / static_cast<double>(candidate.size());
  const double r = lcs / static_cast<double>(reference.size());
  return {p, r, harmonic(p, r)};
}

OneHotProvider::OneHotProvider(std::vector<std::string> vocabulary) {
  std::sort(vocabulary.begin(), vocabulary.end());
  vocabulary.erase(std::unique(vocabulary.begin(), vocabulary.end()), vocabulary.end());
  for (std::size_t i = 0; i < vocabulary.size(); ++i) index_.emplace(vocabulary[i], i);
}

std::vector<std::vector<double>> OneHotProvider::embed(const TokenSequence& tokens) const {
  std::vector<std::vector<double>> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens.tokens()) {
    auto it = index_.find(t);
    if (it == index_.end()) throw InputError("one_hot provider: unknown token '" + t + "'");
    std::vector<double> v(index_.size(), 0.0);
    v[it->second] = 1.0;
    out.push_back(std::move(v));
  }
  return out;
}

OneHotProvider OneHotProvider::for_pairs(const std::vector<CaptionPair>& pairs) {
  std::set<std::string> vocab;
  for (const CaptionPair& p : pairs) {
    for (const std::string& t : tokenize(p.reference).tokens()) vocab.insert(t);
    for (const std::string& t : tokenize(p.candidate).tokens()) vocab.insert(t);
  }
  return OneHotProvider(std::vector<std::string>(vocab.begin(), vocab.end()));
}

HashedProvider::HashedProvider(std::uint64_t seed, std::size_t dim) : seed_(seed), dim_(dim) {
  if (dim_ == 0) throw InputError("hashed provider: dimension must be positive");
}

std::vector<double> HashedProvider::vector_for(std::string_view token) const {
  SplitMix64 rng(mix_seed(seed_, token, 0));
  std::vector<double> v(dim_);
  for (double& x : v) x = 2.0 * rng.uniform() - 1.0;
  std::vector<double> u = unit(std::move(v));
  if (u.empty()) {
    u.assign(dim_, 0.0);
    u[0] = 1.0;
  }
  return u;
}

std::vector<std::vector<double>> HashedProvider::embed(const TokenSequence& tokens) const {
  std::vector<std::vector<double>> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens.tokens()) out.push_back(vector_for(t));
  return out;
}

std::string HashedProvider::describe() const {
  return "hashed:" + std::to_string(seed_) + " (dim " + std::to_string(dim_) + ")";
}

FileProvider FileProvider::parse(std::string_view jsonl, std::string description) {
  FileProvider provider;
  provider.description_ = std::move(description);
  std::size_t line_no = 0, pos = 0;
  while (pos < jsonl.size()) {
    std::size_t nl = jsonl.find('\n', pos);
    if (nl == std::string_view::npos) nl = jsonl.size();
    const std::string_view line = jsonl.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const std::string where = "token embeddings line " + std::to_string(line_no);
    const Json obj = parse_json(line, where);
    if (!obj.is_object()) throw InputError(where + ": expected a JSON object");
    if (!obj.contains("token") && obj.contains("comment")) continue;
    if (!obj.contains("token") || !obj.at("token").is_string()) {
      throw InputError(where + ": missing field token");
    }
    if (!obj.contains("vector") || !obj.at("vector").is_array()) {
      throw InputError(where + ": missing field vector");
    }
    const std::string token = obj.at("token").get<std::string>();
    std::vector<double> v;
    for (const Json& x : obj.at("vector")) {
      if (!x.is_number() || !std::isfinite(x.get<double>())) {
        throw InputError(where + ": non-finite component for token " + token);
      }
      v.push_back(x.get<double>());
    }
    if (provider.dim_ == 0) provider.dim_ = v.size();
    if (v.size() != provider.dim_) {
      throw InputError(where + ": dimension mismatch for token " + token);
    }
    std::vector<double> u = unit(std::move(v));
    if (u.empty()) throw InputError(where + ": zero vector for token " + token);
    provider.vectors_[token] = std::move(u);
  }
  if (provider.vectors_.empty()) throw InputError("token embeddings: no vectors");
  return provider;
}

FileProvider FileProvider::load(const std::filesystem::path& path) {
  return parse(read_file(path), "file:" + path.filename().string());
}

std::vector<std::vector<double>> FileProvider::embed(const TokenSequence& tokens) const {
  std::vector<std::vector<double>> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens.tokens()) {
    auto it = vectors_.find(t);
    if (it == vectors_.end()) it = vectors_.find(std::string_view("<unk>"));
    if (it == vectors_.end()) throw InputError("file provider: unknown token '" + t + "'");
    out.push_back(it->second);
  }
  return out;
}

std::unique_ptr<EmbeddingProvider> make_provider(std::string_view spec,
                                                 const std::vector<CaptionPair>& pairs) {
  if (spec == "one_hot") return std::make_unique<OneHotProvider>(OneHotProvider::for_pairs(pairs));
  if (spec.substr(0, 7) == "hashed:") {
    const std::string digits(spec.substr(7));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("provider: invalid hashed seed '" + digits + "'");
    }
    return std::make_unique<HashedProvider>(std::stoull(digits));
  }
  if (spec.substr(0, 5) == "file:") {
    return std::make_unique<FileProvider>(FileProvider::load(std::string(spec.substr(5))));
  }
  throw InputError("unknown provider '" + std::string(spec) + "'");
}

Prf bert_score(const TokenSequence& candidate, const TokenSequence& reference,
               const EmbeddingProvider& provider) {
  if (candidate.empty() || reference.empty()) {
    throw UndefinedScoreError("bertscore: undefined for an empty token sequence");
  }
  const auto cand = provider.embed(candidate);
  const auto ref = provider.embed(reference);
  std::vector<double> best_for_ref(ref.size(), -1.0);
  double precision_sum = 0.0;
  for (const auto& c : cand) {
    double best = -1.0;
    for (std::size_t j = 0; j < ref.size(); ++j) {
      const double s = dot(c, ref[j]);
      best = std::max(best, s);
      best_for_ref[j] = std::max(best_for_ref[j], s);
    }
    precision_sum += best;
  }
  double recall_sum = 0.0;
  for (double s : best_for_ref) recall_sum += s;
  const double p = std::clamp(precision_sum / static_cast<double>(cand.size()), 0.0, 1.0);
  const double r = std::clamp(recall_sum / static_cast<double>(ref.size()), 0.0, 1.0);
  return {p, r, harmonic(p, r)};
}

CorpusScores corpus_scores(const std::vector<CaptionPair>& pairs,
                           const EmbeddingProvider* provider, const MetricOptions& options) {
  if (options.bertscore && provider == nullptr) {
    throw InputError("bertscore requested without an embedding provider");
  }
  CorpusScores out;
  out.pairs.resize(pairs.size());
  const std::size_t threads =
      (options.bertscore && !provider->thread_safe()) ? 1 : thread_budget();
  parallel_for(
      pairs.size(),
      [&](std::size_t i) {
        const CaptionPair& pair = pairs[i];
        const TokenSequence cand = tokenize(pair.candidate);
        const TokenSequence ref = tokenize(pair.reference);
        PairScores& s = out.pairs[i];
        s.image_id = pair.image_id;
        if (options.bleu) s.bleu = bleu(cand, ref, options.bleu_max_n, options.smoothing);
        if (options.rouge_l) s.rouge_l = rouge_l(cand, ref);
        if (options.bertscore && !cand.empty() && !ref.empty()) {
          s.bertscore = bert_score(cand, ref, *provider);
        }
      },
      threads);

  MetricMeans& m = out.means;
  m.pairs = pairs.size();
  double bleu_sum = 0.0;
  Prf rouge_sum, bert_sum;
  for (const PairScores& s : out.pairs) {
    if (s.bleu) bleu_sum += *s.bleu;
    if (s.rouge_l) {
      rouge_sum.precision += s.rouge_l->precision;
      rouge_sum.recall += s.rouge_l->recall;
      rouge_sum.f1 += s.rouge_l->f1;
    }
    if (s.bertscore) {
      bert_sum.precision += s.bertscore->precision;
      bert_sum.recall += s.bertscore->recall;
      bert_sum.f1 += s.bertscore->f1;
      ++m.bertscore_pairs;
    }
  }
  const double n = static_cast<double>(pairs.size());
  if (options.bleu && !pairs.empty()) m.bleu = bleu_sum / n;
  if (options.rouge_l && !pairs.empty()) {
    m.rouge_l = Prf{rouge_sum.precision / n, rouge_sum.recall / n, rouge_sum.f1 / n};
  }
  if (options.bertscore && m.bertscore_pairs > 0) {
    const double k = static_cast<double>(m.bertscore_pairs);
    m.bertscore = Prf{bert_sum.precision / k, bert_sum.recall / k, bert_sum.f1 / k};
  }
  return out;
}

Json pair_scores_to_json(const PairScores& s) {
  Json j;
  j["image_id"] = s.image_id;
  j["bleu"] = optional_number(s.bleu);
  j["rouge_l_p"] = s.rouge_l ? Json(s.rouge_l->precision) : Json(nullptr);
  j["rouge_l_r"] = s.rouge_l ? Json(s.rouge_l->recall) : Json(nullptr);
  j["rouge_l_f"] = s.rouge_l ? Json(s.rouge_l->f1) : Json(nullptr);
  j["bertscore_p"] = s.bertscore ? Json(s.bertscore->precision) : Json(nullptr);
  j["bertscore_r"] = s.bertscore ? Json(s.bertscore->recall) : Json(nullptr);
  j["bertscore_f"] = s.bertscore ? Json(s.bertscore->f1) : Json(nullptr);
  return j;
}

Json metric_means_to_json(const MetricMeans& m) {
  Json j;
  j["pairs"] = m.pairs;
  j["bleu"] = optional_number(m.bleu);
  j["rouge_l_p"] = m.rouge_l ? Json(m.rouge_l->precision) : Json(nullptr);
  j["rouge_l_r"] = m.rouge_l ? Json(m.rouge_l->recall) : Json(nullptr);
  j["rouge_l_f"] = m.rouge_l ? Json(m.rouge_l->f1) : Json(nullptr);
  j["bertscore_p"] = m.bertscore ? Json(m.bertscore->precision) : Json(nullptr);
  j["bertscore_r"] = m.bertscore ? Json(m.bertscore->recall) : Json(nullptr);
  j["bertscore_f"] = m.bertscore ? Json(m.bertscore->f1) : Json(nullptr);
  j["bertscore_pairs"] = m.bertscore_pairs;
  return j;
}

}  // namespace hemeval
