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

#include <set>

#include "hemeval/caption_synth.h"
#include "hemeval/error.h"
#include "hemeval/extraction.h"
#include "support.h"

using namespace hemeval;
using testing_support::data_path;
using testing_support::default_lexicon;
using testing_support::default_schema;

namespace {

const TemplateSet& default_templates() {
  static const TemplateSet t = load_templates(data_path("default_templates.json"));
  return t;
}

const CompiledLexicon& compiled() {
  static const CompiledLexicon c(default_lexicon(), default_schema());
  return c;
}

AttributeRecord cll_record() {
  return AttributeRecord{"img7", Source::kLeukemic,
                         {{"cell_type", "lymphocyte"},
                          {"cell_size", "small"},
                          {"nuclear_chromatin_texture", "coarse"},
                          {"diagnosis", "CLL"}}};
}

}  // namespace

TEST_SUITE("caption_synth") {

TEST_CASE("single template renders by direct substitution") {
  const TemplateSet t(
      {"A {cell_size} {cell_type} with {nuclear_chromatin_texture} chromatin, consistent with "
       "{diagnosis}."},
      {});
  // The canonical phrase for coarse already ends in "chromatin", so this
  // lexicon uses the bare adjective.
  Lexicon lex({LexiconAttribute{"cell_type", {LexiconEntry{"lymphocyte", {"lymphocyte"}}}},
               LexiconAttribute{"cell_size", {LexiconEntry{"small", {"small"}}}},
               LexiconAttribute{"nuclear_chromatin_texture", {LexiconEntry{"coarse", {"coarse"}}}},
               LexiconAttribute{"diagnosis", {LexiconEntry{"CLL", {"CLL"}}}}});
  const std::string text = render_caption(cll_record(), t, lex, 0);
  CHECK(text == "A small lymphocyte with coarse chromatin, consistent with CLL.");
  CHECK(render_caption(cll_record(), t, lex, 0) == text);
  CHECK(render_caption(cll_record(), t, lex, 12345) == text);
}

TEST_CASE("template parsing") {
  const CaptionTemplate tpl = parse_template(
      "A {cell_size} {cell_type}[ with {nucleoli_visibility}] <x|y> <@c>.", {{"c", {"p", "q"}}});
  CHECK(tpl.slots() == std::vector<std::string>{"cell_size", "cell_type", "nucleoli_visibility"});
  CHECK(tpl.mandatory_slots() == std::vector<std::string>{"cell_size", "cell_type"});
  CHECK_THROWS_AS(parse_template("A {cell_size", {}), InputError);
  CHECK_THROWS_AS(parse_template("[a [b]]", {}), InputError);
  CHECK_THROWS_AS(parse_template("<@missing>", {}), InputError);
  CHECK_THROWS_AS(parse_template("a } b", {}), InputError);
}

TEST_CASE("template validation") {
  CHECK_NOTHROW(validate_templates(default_templates(), default_schema(), &compiled()));
  CHECK_THROWS_AS(validate_templates(TemplateSet({"A {cell_size} cell."}, {}), default_schema()),
                  InputError);
  CHECK_THROWS_AS(validate_templates(TemplateSet({"A {cell_type}."}, {}), default_schema()),
                  InputError);
  CHECK_THROWS_AS(
      validate_templates(TemplateSet({"A {cell_type} {cell_size} {no_such}."}, {}), default_schema()),
      InputError);
  CHECK_THROWS_AS(validate_templates(TemplateSet({"A small {cell_type} {cell_size}."}, {}),
                                     default_schema(), &compiled()),
                  InputError);
}

TEST_CASE("missing mandatory slot names the slot") {
  AttributeRecord r = cll_record();
  r.values.erase("cell_size");
  const TemplateSet t({"A {cell_size} {cell_type}."}, {});
  try {
    render_caption(r, t, default_lexicon(), 0);
    FAIL("rendered without a mandatory slot");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("cell_size") != std::string::npos);
  }
}

TEST_CASE("optional groups drop when a slot is absent and articles follow the phrase") {
  const TemplateSet t({"This is a {cell_type}[ with {nucleoli_visibility}]."}, {{"extra", {"Also"}}});
  AttributeRecord r{"x", Source::kHealthy, {{"cell_type", "eosinophil"}}};
  CHECK(render_caption(r, t, default_lexicon(), 0) == "This is an eosinophil.");
  r.values["nucleoli_visibility"] = "prominent";
  CHECK(render_caption(r, t, default_lexicon(), 0) ==
        "This is an eosinophil with prominent nucleoli.");
  r.values["cell_size"] = "large";
  CHECK(render_caption(r, t, default_lexicon(), 0) ==
        "This is an eosinophil with prominent nucleoli. Also large.");
}

TEST_CASE("corpus cardinality and determinism") {
  const auto records = testing_support::spanning_records(default_schema(), 2, 9);
  const auto corpus = synth_corpus(records, default_templates(), default_lexicon(), 3, 7);
  CHECK(corpus.size() == 6);
  CHECK(synth_corpus(records, default_templates(), default_lexicon(), 3, 7) == corpus);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(corpus[i].image_id == records[i / 3].image_id);
    CHECK(corpus[i].variant_index == i % 3);
    CHECK(corpus[i].text == render_variant(records[i / 3], default_templates(), default_lexicon(),
                                           7, i % 3));
  }
  CHECK_THROWS_AS(synth_corpus(records, default_templates(), default_lexicon(), 0, 7), InputError);
}

TEST_CASE("single template and single variant depend on records alone") {
  const TemplateSet t({"A {cell_size} {cell_type}."}, {});
  const auto records = testing_support::spanning_records(default_schema(), 20, 4);
  const auto a = synth_corpus(records, t, default_lexicon(), 1, 1);
  const auto b = synth_corpus(records, t, default_lexicon(), 1, 999);
  CHECK(a == b);
}

TEST_CASE("variants of a record differ when there are several templates") {
  const auto records = testing_support::spanning_records(default_schema(), 60, 3);
  const auto corpus = synth_corpus(records, default_templates(), default_lexicon(), 2, 11);
  for (std::size_t i = 0; i < corpus.size(); i += 2) {
    CHECK_MESSAGE(corpus[i].text != corpus[i + 1].text, corpus[i].text);
  }
}

TEST_CASE("seed changes surface form but never the attributes stated") {
  const auto records = testing_support::spanning_records(default_schema(), 40, 5);
  for (const AttributeRecord& r : records) {
    std::set<std::string> first;
    for (std::uint64_t seed : {1u, 2u, 3u, 40u}) {
      const auto e = extract_attributes(render_caption(r, default_templates(), default_lexicon(), seed),
                                        compiled());
      std::set<std::string> attrs;
      for (const auto& [a, v] : e.values) attrs.insert(a);
      if (first.empty()) first = attrs;
      CHECK(attrs == first);
    }
  }
}

TEST_CASE("faithfulness check") {
  AttributeRecord r = cll_record();
  r.values = {{"cell_type", "lymphocyte"}, {"diagnosis", "CLL"}, {"cell_size", "small"},
              {"overall_shape", "round"}, {"nuclear_shape", "round"},
              {"nuclear_chromatin_texture", "coarse"}, {"cytoplasm_amount", "scant"},
              {"nucleoli_visibility", "inconspicuous"}, {"basophilia", "slight"}};
  const std::string rendered = render_caption(r, default_templates(), default_lexicon(), 3);
  CHECK(verify_faithfulness(rendered, r, compiled()).pass);
  CHECK(verify_faithfulness(rendered, r, default_lexicon(), default_schema()).pass);

  std::string swapped = rendered;
  swapped.replace(swapped.find("coarse chromatin"), 16, "open chromatin");
  const FaithfulnessCheck c = verify_faithfulness(swapped, r, compiled());
  CHECK_FALSE(c.pass);
  CHECK(c.contradicted == std::vector<std::string>{"nuclear_chromatin_texture"});

  std::string dropped = rendered;
  const std::size_t at = dropped.find("CLL");
  dropped.erase(at, 3);
  const FaithfulnessCheck d = verify_faithfulness(dropped, r, compiled());
  CHECK_FALSE(d.pass);
  CHECK(d.missing == std::vector<std::string>{"diagnosis"});
}

TEST_CASE("round trip over seeded records") {
  const auto records = testing_support::spanning_records(default_schema(), 200, 77);
  for (std::uint64_t seed : {0u, 1u, 2024u}) {
    const auto corpus = synth_corpus(records, default_templates(), default_lexicon(), 2, seed);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const FaithfulnessCheck c = verify_faithfulness(corpus[i].text, records[i / 2], compiled());
      CHECK_MESSAGE(c.pass, corpus[i].text);
    }
  }
}

TEST_CASE("template file loading") {
  const TemplateSet t = templates_from_json(
      parse_json(R"({"templates":["A {cell_type} with {cell_size}."],"connectives":{"x":["y"]}})",
                 "t"));
  CHECK(t.templates().size() == 1);
  CHECK(t.connectives().at("x") == std::vector<std::string>{"y"});
  CHECK_THROWS_AS(templates_from_json(parse_json(R"({"templates":"x"})", "t")), InputError);
}

}  // TEST_SUITE
