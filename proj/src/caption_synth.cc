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

#include "hemeval/caption_synth.h"

#include <algorithm>
#include <set>

#include "hemeval/error.h"
#include "hemeval/normalize.h"
#include "hemeval/parallel.h"
#include "hemeval/seed.h"

namespace hemeval {
namespace {

using Kind = TemplateSegment::Kind;

std::string trim_copy(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && s[b] == ' ') ++b;
  while (e > b && s[e - 1] == ' ') --e;
  return std::string(s.substr(b, e - b));
}

void collect_slots(const std::vector<TemplateSegment>& segs, bool mandatory_only,
                   std::vector<std::string>& out) {
  for (const TemplateSegment& s : segs) {
    if (s.kind == Kind::kSlot) out.push_back(s.text);
    if (s.kind == Kind::kGroup && !mandatory_only) collect_slots(s.children, false, out);
  }
}

struct Piece {
  std::string text;
  bool literal = true;
};

bool slot_present(const AttributeRecord& record, const std::string& attr) {
  const std::string* v = record.value(attr);
  return v != nullptr && !v->empty();
}

class Renderer {
 public:
  Renderer(const AttributeRecord& record, const Lexicon& lexicon, SplitMix64& rng)
      : record_(record), lexicon_(lexicon), rng_(rng) {}

  void emit(const std::vector<TemplateSegment>& segs) {
    for (const TemplateSegment& s : segs) {
      switch (s.kind) {
        case Kind::kLiteral:
          pieces_.push_back({s.text, true});
          break;
        case Kind::kChoice:
          pieces_.push_back({s.options[rng_.below(s.options.size())], true});
          break;
        case Kind::kSlot:
          if (!slot_present(record_, s.text)) {
            throw InputError("missing mandatory slot " + s.text);
          }
          pieces_.push_back({lexicon_.canonical(s.text, *record_.value(s.text)), false});
          used_.insert(s.text);
          break;
        case Kind::kGroup: {
          std::vector<std::string> inner;
          collect_slots(s.children, false, inner);
          const bool complete = std::all_of(inner.begin(), inner.end(), [&](const std::string& a) {
            return slot_present(record_, a);
          });
          if (complete) emit(s.children);
          break;
        }
      }
    }
  }

  void emit_extras(const std::vector<std::string>& leads) {
    std::vector<std::string> phrases;
    for (const LexiconAttribute& attr : lexicon_.attributes()) {
      if (used_.count(attr.name) != 0 || !slot_present(record_, attr.name)) continue;
      phrases.push_back(lexicon_.canonical(attr.name, *record_.value(attr.name)));
    }
    if (phrases.empty()) return;
    pieces_.push_back({" " + leads[rng_.below(leads.size())] + " ", true});
    for (std::size_t i = 0; i < phrases.size(); ++i) {
      if (i > 0) pieces_.push_back({i + 1 == phrases.size() ? " and " : ", ", true});
      pieces_.push_back({phrases[i], false});
    }
    pieces_.push_back({".", true});
  }

  std::string finish() {
    fix_articles();
    std::string joined;
    for (const Piece& p : pieces_) joined += p.text;
    std::string out = collapse_whitespace(joined);
    if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 32);
    return out;
  }

 private:
  // A literal ending in "a " or "an " takes the article that fits the next
  // rendered piece.
  void fix_articles() {
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      Piece& p = pieces_[i];
      if (!p.literal || p.text.empty() || p.text.back() != ' ') continue;
      std::size_t j = i + 1;
      while (j < pieces_.size() && trim_copy(pieces_[j].text).empty()) ++j;
      if (j == pieces_.size()) continue;
      const std::string next = trim_copy(pieces_[j].text);
      const char c = static_cast<char>(next[0] | 0x20);
      const bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
      std::string body = p.text.substr(0, p.text.size() - 1);
      std::size_t word_start = body.find_last_of(' ');
      word_start = word_start == std::string::npos ? 0 : word_start + 1;
      const std::string word = body.substr(word_start);
      if (word != "a" && word != "an" && word != "A" && word != "An") continue;
      std::string replacement = vowel ? "an" : "a";
      if (word[0] == 'A') replacement[0] = 'A';
      p.text = body.substr(0, word_start) + replacement + " ";
    }
  }

  const AttributeRecord& record_;
  const Lexicon& lexicon_;
  SplitMix64& rng_;
  std::vector<Piece> pieces_;
  std::set<std::string> used_;
};

std::vector<std::string> to_string_list(const Json& arr, std::string_view what) {
  if (!arr.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& v : arr) {
    if (!v.is_string()) throw InputError(std::string(what) + " must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

std::vector<std::string> CaptionTemplate::slots() const {
  std::vector<std::string> out;
  collect_slots(segments, false, out);
  return out;
}

std::vector<std::string> CaptionTemplate::mandatory_slots() const {
  std::vector<std::string> out;
  collect_slots(segments, true, out);
  return out;
}

CaptionTemplate parse_template(std::string_view text,
                               const std::map<std::string, std::vector<std::string>>& connectives) {
  CaptionTemplate tpl;
  tpl.source = std::string(text);
  std::vector<TemplateSegment>* target = &tpl.segments;
  TemplateSegment group{Kind::kGroup, {}, {}, {}};
  bool in_group = false;
  std::string literal;
  auto flush = [&] {
    if (!literal.empty()) target->push_back({Kind::kLiteral, std::move(literal), {}, {}});
    literal.clear();
  };
  auto fail = [&](const std::string& why) {
    throw InputError("template \"" + std::string(text) + "\": " + why);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '{') {
      const std::size_t close = text.find('}', i);
      if (close == std::string_view::npos) fail("unterminated slot");
      const std::string name = trim_copy(text.substr(i + 1, close - i - 1));
      if (name.empty()) fail("empty slot");
      flush();
      target->push_back({Kind::kSlot, name, {}, {}});
      i = close;
    } else if (c == '<') {
      const std::size_t close = text.find('>', i);
      if (close == std::string_view::npos) fail("unterminated alternation");
      const std::string_view body = text.substr(i + 1, close - i - 1);
      TemplateSegment choice{Kind::kChoice, {}, {}, {}};
      if (!body.empty() && body[0] == '@') {
        const std::string name(body.substr(1));
        auto it = connectives.find(name);
        if (it == connectives.end() || it->second.empty()) fail("unknown connective @" + name);
        choice.options = it->second;
      } else {
        std::size_t start = 0;
        while (true) {
          const std::size_t bar = body.find('|', start);
          choice.options.emplace_back(body.substr(start, bar - start));
          if (bar == std::string_view::npos) break;
          start = bar + 1;
        }
      }
      flush();
      target->push_back(std::move(choice));
      i = close;
    } else if (c == '[') {
      if (in_group) fail("nested optional group");
      flush();
      in_group = true;
      group = TemplateSegment{Kind::kGroup, {}, {}, {}};
      target = &group.children;
    } else if (c == ']') {
      if (!in_group) fail("unbalanced ]");
      flush();
      in_group = false;
      target = &tpl.segments;
      target->push_back(std::move(group));
    } else if (c == '}' || c == '>') {
      fail(std::string("stray ") + c);
    } else {
      literal.push_back(c);
    }
  }
  if (in_group) fail("unterminated optional group");
  flush();
  return tpl;
}

TemplateSet::TemplateSet(const std::vector<std::string>& templates,
                         std::map<std::string, std::vector<std::string>> connectives)
    : connectives_(std::move(connectives)) {
  if (templates.empty()) throw InputError("template set is empty");
  for (const auto& [name, options] : connectives_) {
    if (options.empty()) throw InputError("connective '" + name + "' has no options");
  }
  for (const std::string& t : templates) templates_.push_back(parse_template(t, connectives_));
}

const std::vector<std::string>& TemplateSet::extra_leads() const {
  static const std::vector<std::string> fallback = {"It shows"};
  auto it = connectives_.find("extra");
  return it == connectives_.end() ? fallback : it->second;
}

void validate_templates(const TemplateSet& templates, const AttributeSchema& schema,
                        const CompiledLexicon* compiled) {
  for (const CaptionTemplate& tpl : templates.templates()) {
    const auto slots = tpl.slots();
    std::set<std::string> seen;
    bool has_label = false;
    bool has_morphology = false;
    for (const std::string& s : slots) {
      if (schema.find(s) == nullptr) {
        throw InputError("template \"" + tpl.source + "\": unknown attribute " + s);
      }
      if (!seen.insert(s).second) {
        throw InputError("template \"" + tpl.source + "\": slot " + s + " appears twice");
      }
      (is_label_attribute(s) ? has_label : has_morphology) = true;
    }
    if (!has_label) {
      throw InputError("template \"" + tpl.source + "\": needs a cell_type or diagnosis slot");
    }
    if (!has_morphology) {
      throw InputError("template \"" + tpl.source + "\": needs a morphology slot");
    }
  }
  if (compiled == nullptr) return;

  std::vector<std::string> texts;
  std::vector<const std::vector<TemplateSegment>*> stack;
  for (const CaptionTemplate& tpl : templates.templates()) stack.push_back(&tpl.segments);
  while (!stack.empty()) {
    const auto* segs = stack.back();
    stack.pop_back();
    for (const TemplateSegment& s : *segs) {
      if (s.kind == Kind::kLiteral) texts.push_back(s.text);
      if (s.kind == Kind::kChoice) texts.insert(texts.end(), s.options.begin(), s.options.end());
      if (s.kind == Kind::kGroup) stack.push_back(&s.children);
    }
  }
  for (const std::string& lead : templates.extra_leads()) texts.push_back(lead);
  for (const auto& [name, options] : templates.connectives()) {
    texts.insert(texts.end(), options.begin(), options.end());
  }
  for (const std::string& t : texts) {
    const ExtractionResult r = extract_attributes(t, *compiled);
    if (!r.values.empty()) {
      const auto& [attr, ev] = *r.values.begin();
      throw InputError("template text \"" + t + "\" matches lexicon pattern '" + ev.pattern +
                       "' of " + attr);
    }
  }
}

TemplateSet templates_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("templates")) {
    throw InputError("template file: missing field templates");
  }
  std::map<std::string, std::vector<std::string>> connectives;
  if (doc.contains("connectives")) {
    const Json& c = doc.at("connectives");
    if (!c.is_object()) throw InputError("template file: connectives must be an object");
    for (const auto& [name, list] : c.items()) {
      connectives[name] = to_string_list(list, "connectives." + name);
    }
  }
  return TemplateSet(to_string_list(doc.at("templates"), "templates"), std::move(connectives));
}

TemplateSet load_templates(const std::filesystem::path& path) {
  return templates_from_json(parse_json(read_file(path), path.string()));
}

std::string render_variant(const AttributeRecord& record, const TemplateSet& templates,
                           const Lexicon& lexicon, std::uint64_t seed, std::uint64_t variant) {
  const std::size_t count = templates.templates().size();
  if (count == 0) throw InputError("template set is empty");
  SplitMix64 base(mix_seed(seed, record.image_id, 0));
  const std::size_t index = static_cast<std::size_t>((base.below(count) + variant % count) % count);
  SplitMix64 rng(mix_seed(seed, record.image_id, variant));
  Renderer renderer(record, lexicon, rng);
  renderer.emit(templates.templates()[index].segments);
  renderer.emit_extras(templates.extra_leads());
  return renderer.finish();
}

std::string render_caption(const AttributeRecord& record, const TemplateSet& templates,
                           const Lexicon& lexicon, std::uint64_t seed) {
  return render_variant(record, templates, lexicon, seed, 0);
}

std::vector<SynthCaption> synth_corpus(const std::vector<AttributeRecord>& records,
                                       const TemplateSet& templates, const Lexicon& lexicon,
                                       std::uint64_t variants_per_record, std::uint64_t seed) {
  if (variants_per_record < 1) throw InputError("variants_per_record must be at least 1");
  std::vector<SynthCaption> out(records.size() * variants_per_record);
  parallel_for(records.size(), [&](std::size_t r) {
    const AttributeRecord& record = records[r];
    for (std::uint64_t k = 0; k < variants_per_record; ++k) {
      try {
        out[r * variants_per_record + k] = {
            record.image_id, k, render_variant(record, templates, lexicon, seed, k)};
      } catch (const InputError& e) {
        throw InputError("record " + record.image_id + ": " + e.what());
      }
    }
  });
  return out;
}

FaithfulnessCheck verify_faithfulness(std::string_view caption, const AttributeRecord& record,
                                      const CompiledLexicon& compiled) {
  FaithfulnessCheck check;
  const ExtractionResult extracted = extract_attributes(caption, compiled, record.image_id);
  for (const auto& info : compiled.attributes()) {
    const std::string* truth = record.value(info.name);
    const ExtractedValue* got = extracted.value(info.name);
    if (truth == nullptr) {
      if (got != nullptr) check.extraneous.push_back(info.name);
      continue;
    }
    if (got == nullptr) {
      check.missing.push_back(info.name);
    } else if (got->value != *truth || extracted.conflict(info.name) != nullptr) {
      check.contradicted.push_back(info.name);
    }
  }
  check.pass = check.missing.empty() && check.contradicted.empty();
  return check;
}

FaithfulnessCheck verify_faithfulness(std::string_view caption, const AttributeRecord& record,
                                      const Lexicon& lexicon, const AttributeSchema& schema) {
  return verify_faithfulness(caption, record, CompiledLexicon(lexicon, schema));
}

}  // namespace hemeval
