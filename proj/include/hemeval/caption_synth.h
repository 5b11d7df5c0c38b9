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

// Template-based caption synthesis.
//
// Template syntax:
//   {attribute}    slot, replaced by the canonical lexicon phrase of the value
//   [ ... ]        optional group, dropped when any slot inside it is absent
//   <a|b|c>        connective alternation, one option picked per render
//   <@name>        alternation over connectives[name] from the template file
//
// A slot outside any group is mandatory. Attributes present in the record but
// not slotted by the chosen template are appended as one trailing sentence,
// "<lead> p1, p2 and p3.", with the lead picked from connectives["extra"].
// A literal a/an right before a slot is adjusted to the phrase's first letter,
// and the first letter of the caption is capitalised.
//
// Seeding: variant k of record r renders with connective stream
// SplitMix64(mix_seed(seed, r.image_id, k)) and template index
// (b + k) mod |templates|, where b = SplitMix64(mix_seed(seed, r.image_id, 0))
// .below(|templates|). Successive variants therefore cycle through distinct
// templates. render_caption() is variant 0.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hemeval/config_io.h"
#include "hemeval/extraction.h"
#include "hemeval/lexicon.h"
#include "hemeval/records.h"
#include "hemeval/schema.h"

namespace hemeval {

struct TemplateSegment {
  enum class Kind { kLiteral, kSlot, kChoice, kGroup };
  Kind kind = Kind::kLiteral;
  std::string text;                      // literal text or slot attribute
  std::vector<std::string> options;      // kChoice
  std::vector<TemplateSegment> children; // kGroup
};

struct CaptionTemplate {
  std::string source;
  std::vector<TemplateSegment> segments;

  /// Slot attributes in order of appearance, optional ones included.
  std::vector<std::string> slots() const;
  /// Slots outside any optional group.
  std::vector<std::string> mandatory_slots() const;
};

/// Parses one template string; throws InputError on malformed syntax or a
/// `<@name>` that `connectives` lacks.
CaptionTemplate parse_template(std::string_view text,
                               const std::map<std::string, std::vector<std::string>>& connectives);

class TemplateSet {
 public:
  TemplateSet() = default;
  /// Parses every template. Throws InputError if the list is empty.
  TemplateSet(const std::vector<std::string>& templates,
              std::map<std::string, std::vector<std::string>> connectives);

  const std::vector<CaptionTemplate>& templates() const { return templates_; }
  const std::map<std::string, std::vector<std::string>>& connectives() const {
    return connectives_;
  }
  /// connectives["extra"], or {"It shows"} when absent.
  const std::vector<std::string>& extra_leads() const;

 private:
  std::vector<CaptionTemplate> templates_;
  std::map<std::string, std::vector<std::string>> connectives_;
};

/// Every slot names a schema attribute, appears once per template, and each
/// template has a cell_type or diagnosis slot plus one other slot. If
/// `compiled` is given, no literal or connective may match a lexicon pattern
/// on its own. Throws InputError.
void validate_templates(const TemplateSet& templates, const AttributeSchema& schema,
                        const CompiledLexicon* compiled = nullptr);

/// {"templates": [...], "connectives": {"name": [...]}}
TemplateSet templates_from_json(const Json& doc);
TemplateSet load_templates(const std::filesystem::path& path);

/// Renders variant 0. Throws InputError naming a missing mandatory slot.
std::string render_caption(const AttributeRecord& record, const TemplateSet& templates,
                           const Lexicon& lexicon, std::uint64_t seed);

/// Renders variant `variant` of `record`.
std::string render_variant(const AttributeRecord& record, const TemplateSet& templates,
                           const Lexicon& lexicon, std::uint64_t seed, std::uint64_t variant);

struct SynthCaption {
  std::string image_id;
  std::uint64_t variant_index = 0;
  std::string text;

  bool operator==(const SynthCaption&) const = default;
};

/// |records| x variants_per_record captions, record-major. Throws
/// InputError("record <id>: ...") for the first failing record.
std::vector<SynthCaption> synth_corpus(const std::vector<AttributeRecord>& records,
                                       const TemplateSet& templates, const Lexicon& lexicon,
                                       std::uint64_t variants_per_record, std::uint64_t seed);

struct FaithfulnessCheck {
  bool pass = false;
  std::vector<std::string> missing;       // applicable attribute not recovered
  std::vector<std::string> contradicted;  // wrong value or competing values
  std::vector<std::string> extraneous;    // mentioned but absent from the record
};

/// Passes iff extraction recovers every attribute of the record with the
/// right value and without a conflict. Extraneous mentions are reported but
/// do not fail the check.
FaithfulnessCheck verify_faithfulness(std::string_view caption, const AttributeRecord& record,
                                      const CompiledLexicon& compiled);
FaithfulnessCheck verify_faithfulness(std::string_view caption, const AttributeRecord& record,
                                      const Lexicon& lexicon, const AttributeSchema& schema);

}  // namespace hemeval
