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

#include "hemeval/lexicon.h"

#include <algorithm>
#include <set>

#include "hemeval/error.h"
#include "hemeval/normalize.h"

namespace hemeval {
namespace {

constexpr std::string_view kWildcard = "*";

bool tokens_compatible(const std::string& a, const std::string& b) {
  return a == kWildcard || b == kWildcard || a == b;
}

}  // namespace

const LexiconEntry* LexiconAttribute::find(std::string_view value) const {
  for (const LexiconEntry& e : entries) {
    if (e.value == value) return &e;
  }
  return nullptr;
}

const LexiconAttribute* Lexicon::find(std::string_view attribute) const {
  for (const LexiconAttribute& a : attributes_) {
    if (a.name == attribute) return &a;
  }
  return nullptr;
}

const LexiconEntry* Lexicon::find(std::string_view attribute, std::string_view value) const {
  const LexiconAttribute* a = find(attribute);
  return a == nullptr ? nullptr : a->find(value);
}

const std::string& Lexicon::canonical(std::string_view attribute, std::string_view value) const {
  const LexiconEntry* e = find(attribute, value);
  if (e == nullptr || e->patterns.empty()) {
    throw InputError("lexicon: no phrase for " + std::string(attribute) + "=" +
                     std::string(value));
  }
  return e->canonical();
}

std::vector<std::string> pattern_tokens(std::string_view pattern) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < pattern.size()) {
    while (i < pattern.size() && (pattern[i] == ' ' || pattern[i] == '\t')) ++i;
    const std::size_t begin = i;
    while (i < pattern.size() && pattern[i] != ' ' && pattern[i] != '\t') ++i;
    if (i == begin) continue;
    const std::string_view piece = pattern.substr(begin, i - begin);
    if (piece == kWildcard) {
      tokens.emplace_back(kWildcard);
      continue;
    }
    for (std::string& t : normalized_tokens(piece)) tokens.push_back(std::move(t));
  }
  return tokens;
}

bool pattern_occurs_in(const std::vector<std::string>& needle,
                       const std::vector<std::string>& haystack) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (std::size_t start = 0; start + needle.size() <= haystack.size(); ++start) {
    bool all = true;
    for (std::size_t k = 0; k < needle.size() && all; ++k) {
      all = tokens_compatible(needle[k], haystack[start + k]);
    }
    if (all) return true;
  }
  return false;
}

void validate_lexicon(const Lexicon& lexicon, const AttributeSchema& schema) {
  std::set<std::string_view> seen_attributes;
  for (const LexiconAttribute& attr : lexicon.attributes()) {
    const AttributeDef* def = schema.find(attr.name);
    if (def == nullptr) {
      throw InputError("lexicon: attribute '" + attr.name + "' is not in the schema");
    }
    if (!seen_attributes.insert(attr.name).second) {
      throw InputError("lexicon: attribute '" + attr.name + "' listed twice");
    }
    std::set<std::string_view> seen_values;
    for (const LexiconEntry& entry : attr.entries) {
      if (!def->allows(entry.value)) {
        throw InputError("lexicon: value '" + entry.value + "' is not allowed for " + attr.name);
      }
      if (!seen_values.insert(entry.value).second) {
        throw InputError("lexicon: value " + attr.name + "=" + entry.value + " listed twice");
      }
      for (const std::string& p : entry.patterns) {
        const auto tokens = pattern_tokens(p);
        if (std::all_of(tokens.begin(), tokens.end(),
                        [](const std::string& t) { return t == kWildcard; })) {
          throw InputError("lexicon: pattern '" + p + "' for " + attr.name + "=" + entry.value +
                           " has no literal token");
        }
      }
      if (!entry.patterns.empty()) {
        const auto canon = pattern_tokens(entry.canonical());
        if (std::find(canon.begin(), canon.end(), kWildcard) != canon.end()) {
          throw InputError("lexicon: canonical phrase '" + entry.canonical() + "' for " +
                           attr.name + "=" + entry.value + " contains a wildcard");
        }
      }
    }
  }

  for (const AttributeDef& def : schema.attributes()) {
    for (const std::string& value : def.allowed_values) {
      const LexiconEntry* entry = lexicon.find(def.name, value);
      if (entry == nullptr || entry->patterns.empty()) {
        throw InputError("lexicon: no pattern for " + def.name + "=" + value);
      }
    }
  }

  for (const LexiconAttribute& attr : lexicon.attributes()) {
    for (std::size_t a = 0; a < attr.entries.size(); ++a) {
      for (std::size_t b = 0; b < attr.entries.size(); ++b) {
        if (a == b) continue;
        for (const std::string& pa : attr.entries[a].patterns) {
          const auto ta = pattern_tokens(pa);
          for (const std::string& pb : attr.entries[b].patterns) {
            if (pattern_occurs_in(ta, pattern_tokens(pb))) {
              throw InputError("lexicon: ambiguous patterns for " + attr.name + ": '" + pa +
                               "' (" + attr.entries[a].value + ") occurs in '" + pb + "' (" +
                               attr.entries[b].value + ")");
            }
          }
        }
      }
    }
  }
}

}  // namespace hemeval
