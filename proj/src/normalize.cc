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

#include "hemeval/normalize.h"

namespace hemeval {
namespace {

bool is_word_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c >= 0x80;
}

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

Span NormalizedText::to_original(std::size_t begin, std::size_t end) const {
  if (begin >= end || end > offsets.size()) return Span{};
  return Span{offsets[begin], offsets[end - 1] + 1};
}

NormalizedText normalize(std::string_view text) {
  NormalizedText out;
  out.text.reserve(text.size());
  out.offsets.reserve(text.size());
  bool pending_space = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    bool keep = is_word_byte(c);
    if (!keep && c == '-' && i > 0 && i + 1 < text.size()) {
      keep = is_word_byte(static_cast<unsigned char>(text[i - 1])) &&
             is_word_byte(static_cast<unsigned char>(text[i + 1]));
    }
    if (!keep) {
      pending_space = !out.text.empty();
      continue;
    }
    if (pending_space) {
      out.text.push_back(' ');
      out.offsets.push_back(i - 1);
      pending_space = false;
    }
    out.text.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a')
                                              : static_cast<char>(c));
    out.offsets.push_back(i);
  }
  return out;
}

std::vector<TokenRange> token_ranges(std::string_view normalized) {
  std::vector<TokenRange> tokens;
  std::size_t i = 0;
  while (i < normalized.size()) {
    while (i < normalized.size() && normalized[i] == ' ') ++i;
    const std::size_t begin = i;
    while (i < normalized.size() && normalized[i] != ' ') ++i;
    if (i > begin) tokens.push_back({begin, i});
  }
  return tokens;
}

std::vector<std::string> normalized_tokens(std::string_view text) {
  const NormalizedText norm = normalize(text);
  std::vector<std::string> tokens;
  for (const TokenRange& t : token_ranges(norm.text)) {
    tokens.emplace_back(norm.text.substr(t.begin, t.end - t.begin));
  }
  return tokens;
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char ch : text) {
    if (is_space(static_cast<unsigned char>(ch))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(ch);
  }
  return out;
}

}  // namespace hemeval
