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

// The lexicon ties caption text to attribute values. Caption synthesis renders
// the canonical phrase of each value; extraction recognises every pattern.
//
// A pattern is a phrase whose tokens are matched after normalization. The
// token `*` matches any single token. Canonical phrases may not contain
// wildcards since they are rendered verbatim.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hemeval/schema.h"

namespace hemeval {

struct LexiconEntry {
  std::string value;
  /// First pattern is the canonical phrase.
  std::vector<std::string> patterns;

  const std::string& canonical() const { return patterns.front(); }

  bool operator==(const LexiconEntry&) const = default;
};

struct LexiconAttribute {
  std::string name;
  std::vector<LexiconEntry> entries;

  const LexiconEntry* find(std::string_view value) const;

  bool operator==(const LexiconAttribute&) const = default;
};

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<LexiconAttribute> attributes)
      : attributes_(std::move(attributes)) {}

  const std::vector<LexiconAttribute>& attributes() const { return attributes_; }
  const LexiconAttribute* find(std::string_view attribute) const;
  const LexiconEntry* find(std::string_view attribute, std::string_view value) const;
  /// Throws InputError if the pair has no entry.
  const std::string& canonical(std::string_view attribute, std::string_view value) const;

  bool operator==(const Lexicon&) const = default;

 private:
  std::vector<LexiconAttribute> attributes_;
};

/// Token form of a pattern: normalized tokens with `*` kept as the wildcard.
std::vector<std::string> pattern_tokens(std::string_view pattern);

/// True if `needle` occurs as a contiguous token run inside `haystack`, with a
/// wildcard on either side compatible with any token.
bool pattern_occurs_in(const std::vector<std::string>& needle,
                       const std::vector<std::string>& haystack);

/// Checks coverage of every schema (attribute, value), that entries reference
/// schema values, that canonical phrases are wildcard-free, and that no
/// pattern occurs inside a pattern of a different value of the same
/// attribute. Throws InputError naming the offending patterns.
void validate_lexicon(const Lexicon& lexicon, const AttributeSchema& schema);

}  // namespace hemeval
