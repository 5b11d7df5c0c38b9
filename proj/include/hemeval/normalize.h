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
#include <string>
#include <string_view>
#include <vector>

#include "hemeval/records.h"

namespace hemeval {

/// Caption text reduced to lowercase word tokens separated by single spaces.
///
/// Word characters are ASCII letters and digits plus every byte >= 0x80, so
/// UTF-8 sequences pass through untouched. A hyphen survives only between two
/// word characters. Everything else becomes a separator.
struct NormalizedText {
  std::string text;
  /// offsets[i] is the byte offset in the original text of text[i].
  std::vector<std::size_t> offsets;

  /// Maps the normalized range [begin, end) back to original byte offsets.
  Span to_original(std::size_t begin, std::size_t end) const;
};

NormalizedText normalize(std::string_view text);

/// A token of normalized text as a byte range into it.
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<TokenRange> token_ranges(std::string_view normalized);

/// normalize() followed by a whitespace split.
std::vector<std::string> normalized_tokens(std::string_view text);

/// Collapses whitespace runs to one space and trims both ends.
std::string collapse_whitespace(std::string_view text);

}  // namespace hemeval
