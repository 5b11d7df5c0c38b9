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

#include <cmath>
#include <random>

#include "hemeval/error.h"
#include "hemeval/ingest.h"
#include "hemeval/text_metrics.h"
#include "oracles.h"
#include "support.h"

using namespace hemeval;
using testing_support::fixture_path;

namespace {

std::vector<std::string> random_tokens(std::mt19937& rng, std::size_t max_len,
                                       std::size_t vocab) {
  std::vector<std::string> out;
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) out.push_back("w" + std::to_string(rng() % vocab));
  return out;
}

std::string join(const std::vector<std::string>& t) {
  std::string s;
  for (const auto& w : t) s += w + " ";
  return s;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_SUITE("text_metrics") {

TEST_CASE("tokenizer examples") {
  CHECK(tokenize("Large cell with coarse chromatin.").tokens() ==
        std::vector<std::string>{"large", "cell", "with", "coarse", "chromatin"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("CLL, CLL").tokens() == std::vector<std::string>{"cll", "cll"});
}

TEST_CASE("BLEU anchors") {
  const auto ref = tokenize("large cell with coarse chromatin");
  CHECK(bleu(ref, ref) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bleu(tokenize("a b c"), tokenize("x y z")) == 0.0);
  CHECK(bleu(tokenize(""), ref) == 0.0);
  const double b = bleu(tokenize("large cell coarse chromatin"), ref, 2, Smoothing::kNone);
  CHECK(b == doctest::Approx(std::exp(-0.25) * std::sqrt(2.0 / 3.0)).epsilon(1e-12));
  CHECK(std::abs(b - 0.6359) < 1e-4);
  CHECK_THROWS_AS(bleu(ref, ref, 0), InputError);
}

TEST_CASE("BLEU matches the counting oracle") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 400; ++trial) {
    const auto c = random_tokens(rng, 10, 6);
    const auto r = random_tokens(rng, 10, 6);
    const std::size_t n = 1 + rng() % 4;
    for (bool eps : {false, true}) {
      const double got = bleu(tokenize(join(c)), tokenize(join(r)), n,
                              eps ? Smoothing::kEpsilon : Smoothing::kNone);
      CHECK(std::abs(got - oracle::bleu(c, r, n, eps)) <= 1e-9);
      CHECK(got >= 0.0);
      CHECK(got <= 1.0);
    }
  }
}

TEST_CASE("ROUGE-L anchors and oracle") {
  const Prf same = rouge_l(tokenize("a b c"), tokenize("a b c"));
  CHECK(same == Prf{1, 1, 1});
  const Prf p = rouge_l(tokenize("large blast cell"), tokenize("large leukemic blast cell"));
  CHECK(p.precision == 1.0);
  CHECK(p.recall == 0.75);
  CHECK(p.f1 == doctest::Approx(6.0 / 7.0).epsilon(1e-12));
  CHECK(rouge_l(tokenize("a b"), tokenize("c d")) == Prf{0, 0, 0});
  CHECK(rouge_l(tokenize(""), tokenize("c d")) == Prf{0, 0, 0});

  std::mt19937 rng(202);
  for (int trial = 0; trial < 400; ++trial) {
    const auto c = random_tokens(rng, 12, 5);
    const auto r = random_tokens(rng, 12, 5);
    const Prf got = rouge_l(tokenize(join(c)), tokenize(join(r)));
    const oracle::Prf want = oracle::rouge_l(c, r);
    CHECK(std::abs(got.precision - want.p) <= 1e-9);
    CHECK(std::abs(got.recall - want.r) <= 1e-9);
    CHECK(std::abs(got.f1 - want.f) <= 1e-9);

    // Swapping sides swaps precision and recall.
    const Prf swapped = rouge_l(tokenize(join(r)), tokenize(join(c)));
    CHECK(swapped.precision == got.recall);
    CHECK(swapped.recall == got.precision);
    CHECK(swapped.f1 == doctest::Approx(got.f1).epsilon(1e-12));

    // Deleting a candidate token never raises recall.
    if (!c.empty()) {
      auto shorter = c;
      shorter.erase(shorter.begin() + static_cast<long>(rng() % shorter.size()));
      CHECK(rouge_l(tokenize(join(shorter)), tokenize(join(r))).recall <= got.recall);
    }
  }
}

TEST_CASE("BERTScore with the one-hot provider reduces to token overlap") {
  const std::vector<CaptionPair> pairs = {{"x", "a c", "a b"}};
  const OneHotProvider onehot = OneHotProvider::for_pairs(pairs);
  const Prf s = bert_score(tokenize("a b"), tokenize("a c"), onehot);
  CHECK(s == Prf{0.5, 0.5, 0.5});
  CHECK_THROWS_AS(bert_score(tokenize(""), tokenize("a"), onehot), UndefinedScoreError);
  CHECK_THROWS_AS(bert_score(tokenize("zzz"), tokenize("a"), onehot), InputError);
}

TEST_CASE("BERTScore identity and symmetry") {
  const HashedProvider hashed(7);
  std::mt19937 rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = random_tokens(rng, 8, 20);
    auto r = random_tokens(rng, 8, 20);
    if (c.empty() || r.empty()) continue;
    const Prf self = bert_score(tokenize(join(c)), tokenize(join(c)), hashed);
    CHECK(self.precision == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(self.recall == doctest::Approx(1.0).epsilon(1e-9));
    const Prf ab = bert_score(tokenize(join(c)), tokenize(join(r)), hashed);
    const Prf ba = bert_score(tokenize(join(r)), tokenize(join(c)), hashed);
    CHECK(ab.precision == ba.recall);
    CHECK(ab.f1 == doctest::Approx(ba.f1).epsilon(1e-12));
  }
}

TEST_CASE("hashed provider matches a double-loop cosine oracle") {
  const HashedProvider hashed(42, 32);
  const auto c = tokenize("large blast cell with open chromatin");
  const auto r = tokenize("a large leukemic blast with fine chromatin and prominent nucleoli");
  double psum = 0.0, rsum = 0.0;
  for (const auto& ct : c.tokens()) {
    double best = -1.0;
    for (const auto& rt : r.tokens()) {
      const auto u = hashed.vector_for(ct), v = hashed.vector_for(rt);
      best = std::max(best, dot(u, v) / std::sqrt(dot(u, u) * dot(v, v)));
    }
    psum += best;
  }
  for (const auto& rt : r.tokens()) {
    double best = -1.0;
    for (const auto& ct : c.tokens()) {
      const auto u = hashed.vector_for(ct), v = hashed.vector_for(rt);
      best = std::max(best, dot(u, v) / std::sqrt(dot(u, u) * dot(v, v)));
    }
    rsum += best;
  }
  const double p = std::clamp(psum / static_cast<double>(c.size()), 0.0, 1.0);
  const double rr = std::clamp(rsum / static_cast<double>(r.size()), 0.0, 1.0);
  const Prf got = bert_score(c, r, hashed);
  CHECK(std::abs(got.precision - p) <= 1e-9);
  CHECK(std::abs(got.recall - rr) <= 1e-9);
  CHECK(std::abs(got.f1 - 2 * p * rr / (p + rr)) <= 1e-9);
  for (const auto& v : hashed.embed(c)) CHECK(std::sqrt(dot(v, v)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("file provider") {
  const FileProvider f = FileProvider::parse(
      "{\"comment\":\"toy\",\"dim\":2}\n"
      "{\"token\":\"a\",\"vector\":[3,4]}\n"
      "{\"token\":\"<unk>\",\"vector\":[0,1]}\n");
  CHECK(f.dim() == 2);
  const auto v = f.embed(tokenize("a zzz"));
  CHECK(v[0] == std::vector<double>{0.6, 0.8});
  CHECK(v[1] == std::vector<double>{0.0, 1.0});
  CHECK_THROWS_AS(FileProvider::parse("{\"token\":\"a\",\"vector\":[1]}\n{\"token\":\"b\",\"vector\":[1,2]}\n"),
                  InputError);
  const FileProvider no_unk = FileProvider::parse("{\"token\":\"a\",\"vector\":[1,0]}\n");
  CHECK_THROWS_AS(no_unk.embed(tokenize("b")), InputError);
  CHECK_THROWS_AS(make_provider("nonsense", {}), InputError);
  CHECK(make_provider("hashed:3", {})->dim() == 64);
}

TEST_CASE("corpus aggregation") {
  MetricOptions opts;
  opts.bertscore = false;
  const auto one = corpus_scores({{"a", "large cell", "large cell"}}, nullptr, opts);
  CHECK(*one.means.bleu == *one.pairs[0].bleu);
  CHECK(one.means.rouge_l->f1 == one.pairs[0].rouge_l->f1);

  opts.bleu_max_n = 1;
  const auto two = corpus_scores({{"a", "x y", "x y"}, {"b", "x y", "p q"}}, nullptr, opts);
  CHECK(*two.pairs[0].bleu == 1.0);
  CHECK(*two.pairs[1].bleu == 0.0);
  CHECK(*two.means.bleu == 0.5);

  MetricOptions with_bert;
  CHECK_THROWS_AS(corpus_scores({{"a", "x", "x"}}, nullptr, with_bert), InputError);
}

TEST_CASE("twenty-pair fixture aggregates equal recomputation from per-pair output") {
  const auto pairs = load_caption_pairs(fixture_path("pairs_20.jsonl"));
  const auto provider = make_provider("one_hot", pairs);
  const CorpusScores scores = corpus_scores(pairs, provider.get(), MetricOptions{});
  REQUIRE(scores.pairs.size() == 20);
  // Recompute from the serialized per-pair records, as an external script would.
  double b = 0, rf = 0, bf = 0;
  for (std::size_t i = 0; i < scores.pairs.size(); ++i) {
    const Json j = parse_json(pair_scores_to_json(scores.pairs[i]).dump(), "pair");
    CHECK(j["image_id"] == pairs[i].image_id);
    b += j["bleu"].get<double>();
    rf += j["rouge_l_f"].get<double>();
    bf += j["bertscore_f"].get<double>();
  }
  const Json means = parse_json(metric_means_to_json(scores.means).dump(), "means");
  CHECK(std::abs(means["bleu"].get<double>() - b / 20) <= 1e-12);
  CHECK(std::abs(means["rouge_l_f"].get<double>() - rf / 20) <= 1e-12);
  CHECK(std::abs(means["bertscore_f"].get<double>() - bf / 20) <= 1e-12);
  CHECK(means["bertscore_pairs"] == 20);
}

TEST_CASE("pairs with an empty side get null BERTScore and leave the mean") {
  const std::vector<CaptionPair> pairs = {{"a", "x y", "x y"}, {"b", "x y", "..."}};
  const auto provider = make_provider("one_hot", pairs);
  const CorpusScores s = corpus_scores(pairs, provider.get(), MetricOptions{});
  CHECK(s.pairs[0].bertscore.has_value());
  CHECK_FALSE(s.pairs[1].bertscore.has_value());
  CHECK(s.means.bertscore_pairs == 1);
  CHECK(s.means.bertscore->f1 == 1.0);
  CHECK(pair_scores_to_json(s.pairs[1])["bertscore_f"].is_null());
}

}  // TEST_SUITE
