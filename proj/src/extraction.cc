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

#include "hemeval/extraction.h"

#include <algorithm>
#include <tuple>
#include <utility>

#include "hemeval/normalize.h"

namespace hemeval {

CompiledLexicon::CompiledLexicon(const Lexicon& lexicon, const AttributeSchema& schema) {
  validate_lexicon(lexicon, schema);
  nodes_.emplace_back();
  for (const AttributeDef& def : schema.attributes()) {
    const std::size_t a = attributes_.size();
    AttributeInfo info{def.name, {}};
    for (const std::string& value : def.allowed_values) {
      info.values.push_back({value, lexicon.find(def.name, value)->patterns});
    }
    attributes_.push_back(std::move(info));
    for (std::size_t v = 0; v < attributes_[a].values.size(); ++v) {
      const auto& patterns = attributes_[a].values[v].patterns;
      for (std::size_t p = 0; p < patterns.size(); ++p) {
        std::size_t node = 0;
        for (const std::string& token : pattern_tokens(patterns[p])) {
          node = add_child(node, token);
        }
        nodes_[node].terminals.push_back({a, v, p});
      }
    }
  }
}

std::size_t CompiledLexicon::add_child(std::size_t node, const std::string& token) {
  if (token == "*") {
    if (nodes_[node].wildcard == 0) {
      nodes_.emplace_back();
      nodes_[node].wildcard = nodes_.size() - 1;
    }
    return nodes_[node].wildcard;
  }
  auto it = nodes_[node].children.find(token);
  if (it != nodes_[node].children.end()) return it->second;
  nodes_.emplace_back();
  const std::size_t child = nodes_.size() - 1;
  nodes_[node].children.emplace(token, child);
  return child;
}

std::vector<PatternMatch> CompiledLexicon::find_all(const std::vector<std::string>& tokens) const {
  std::vector<PatternMatch> matches;
  std::vector<std::pair<std::size_t, std::size_t>> frontier;  // (node, depth)
  for (std::size_t start = 0; start < tokens.size(); ++start) {
    frontier.assign(1, {0, 0});
    while (!frontier.empty()) {
      const auto [node, depth] = frontier.back();
      frontier.pop_back();
      for (const Terminal& t : nodes_[node].terminals) {
        matches.push_back({t.attribute, t.value, t.pattern, start, depth});
      }
      const std::size_t pos = start + depth;
      if (pos >= tokens.size()) continue;
      const Node& n = nodes_[node];
      auto it = n.children.find(tokens[pos]);
      if (it != n.children.end()) frontier.emplace_back(it->second, depth + 1);
      if (n.wildcard != 0) frontier.emplace_back(n.wildcard, depth + 1);
    }
  }
  std::sort(matches.begin(), matches.end(), [](const PatternMatch& x, const PatternMatch& y) {
    return std::tie(x.attribute, x.token_begin, y.token_count, x.value, x.pattern) <
           std::tie(y.attribute, y.token_begin, x.token_count, y.value, y.pattern);
  });
  return matches;
}

ExtractionResult extract_attributes(std::string_view caption, const CompiledLexicon& compiled,
                                    std::string image_id) {
  ExtractionResult result;
  result.image_id = std::move(image_id);

  const NormalizedText norm = normalize(caption);
  const auto ranges = token_ranges(norm.text);
  std::vector<std::string> tokens;
  tokens.reserve(ranges.size());
  for (const TokenRange& r : ranges) tokens.push_back(norm.text.substr(r.begin, r.end - r.begin));

  const auto matches = compiled.find_all(tokens);
  const auto& attrs = compiled.attributes();
  // matches are sorted by attribute, then start, so each attribute is a run.
  std::size_t i = 0;
  while (i < matches.size()) {
    const std::size_t a = matches[i].attribute;
    std::vector<PatternMatch> survivors;
    while (i < matches.size() && matches[i].attribute == a) {
      const std::size_t start = matches[i].token_begin;
      // Longest first within a start position; the rest are shadowed.
      survivors.push_back(matches[i]);
      while (i < matches.size() && matches[i].attribute == a && matches[i].token_begin == start) {
        ++i;
      }
    }
    const PatternMatch& first = survivors.front();
    const auto& info = attrs[a];
    const std::size_t nb = ranges[first.token_begin].begin;
    const std::size_t ne = ranges[first.token_begin + first.token_count - 1].end;
    result.values.emplace(info.name,
                          ExtractedValue{info.values[first.value].name, norm.to_original(nb, ne),
                                         info.values[first.value].patterns[first.pattern]});

    std::vector<std::size_t> distinct;
    for (const PatternMatch& m : survivors) distinct.push_back(m.value);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() > 1) {
      Conflict c{info.name, {}};
      for (std::size_t v : distinct) c.values.push_back(info.values[v].name);
      result.conflicts.push_back(std::move(c));
    }
  }
  return result;
}

Json extraction_to_json(const ExtractionResult& result) {
  Json j;
  j["image_id"] = result.image_id;
  if (result.variant_index) j["variant_index"] = *result.variant_index;
  Json values = Json::object();
  Json spans = Json::object();
  for (const auto& [attr, ev] : result.values) {
    values[attr] = ev.value;
    spans[attr] = Json{{"begin", ev.span.begin}, {"end", ev.span.end}, {"pattern", ev.pattern}};
  }
  Json conflicts = Json::array();
  for (const Conflict& c : result.conflicts) {
    conflicts.push_back(Json{{"attribute", c.attribute}, {"values", c.values}});
  }
  j["values"] = std::move(values);
  j["conflicts"] = std::move(conflicts);
  j["spans"] = std::move(spans);
  return j;
}

}  // namespace hemeval
