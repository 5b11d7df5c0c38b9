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

// Attribute extraction by controlled pattern matching.
//
// Patterns are compiled into one token trie. Matching runs over normalized
// caption tokens, so a pattern always covers whole tokens: "small" never
// matches inside "smallish".
//
// Resolution per attribute:
//   1. At each start position only the longest match survives.
//   2. The earliest surviving match gives the reported value and span.
//   3. If survivors name more than one distinct value, a conflict listing all
//      of them (schema order) is recorded as well.
//
// There is no negation handling. "no visible nucleoli" matches a "visible
// nucleoli" pattern unless the lexicon lists the negated phrase under the
// negative value (and the two then may not overlap, see validate_lexicon).

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hemeval/config_io.h"
#include "hemeval/lexicon.h"
#include "hemeval/records.h"
#include "hemeval/schema.h"

namespace hemeval {

/// One occurrence of a lexicon pattern in a token sequence. Indices refer to
/// the compiled lexicon's attribute/value/pattern tables.
struct PatternMatch {
  std::size_t attribute = 0;
  std::size_t value = 0;
  std::size_t pattern = 0;
  std::size_t token_begin = 0;
  std::size_t token_count = 0;

  bool operator==(const PatternMatch&) const = default;
};

class CompiledLexicon {
 public:
  struct ValueInfo {
    std::string name;
    std::vector<std::string> patterns;
  };
  struct AttributeInfo {
    std::string name;
    std::vector<ValueInfo> values;
  };

  /// Validates `lexicon` against `schema` and builds the trie. Attributes and
  /// values follow schema order.
  CompiledLexicon(const Lexicon& lexicon, const AttributeSchema& schema);

  const std::vector<AttributeInfo>& attributes() const { return attributes_; }

  /// Every occurrence of every pattern in `tokens`, ordered by attribute,
  /// start, longest first, then value and pattern.
  std::vector<PatternMatch> find_all(const std::vector<std::string>& tokens) const;

 private:
  struct Terminal {
    std::size_t attribute;
    std::size_t value;
    std::size_t pattern;
  };
  struct Node {
    std::map<std::string, std::size_t, std::less<>> children;
    std::size_t wildcard = 0;  // 0 = none; the root is never a child
    std::vector<Terminal> terminals;
  };

  std::size_t add_child(std::size_t node, const std::string& token);

  std::vector<AttributeInfo> attributes_;
  std::vector<Node> nodes_;
};

inline CompiledLexicon compile_lexicon(const Lexicon& lexicon, const AttributeSchema& schema) {
  return CompiledLexicon(lexicon, schema);
}

ExtractionResult extract_attributes(std::string_view caption, const CompiledLexicon& compiled,
                                    std::string image_id = {});

/// {"image_id", "variant_index"?, "values", "conflicts", "spans"}
Json extraction_to_json(const ExtractionResult& result);

}  // namespace hemeval
