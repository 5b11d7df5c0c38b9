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


#include "hemeval/cli.h"

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hemeval/attr_metrics.h"
#include "hemeval/caption_synth.h"
#include "hemeval/config_io.h"
#include "hemeval/embed_classify.h"
#include "hemeval/error.h"
#include "hemeval/extraction.h"
#include "hemeval/ingest.h"
#include "hemeval/normalize.h"
#include "hemeval/parallel.h"
#include "hemeval/report.h"
#include "hemeval/seed.h"
#include "hemeval/text_metrics.h"

#ifndef HEMEVAL_DATA_DIR
#define HEMEVAL_DATA_DIR "data"
#endif

namespace hemeval::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kHead = "nearest_prototype_cosine";

std::string default_data(const char* file) {
  return (fs::path(HEMEVAL_DATA_DIR) / file).string();
}

std::string base(const std::string& path) {
  return path.empty() ? std::string() : fs::path(path).filename().string();
}

struct Meta {
  std::string command;
  std::uint64_t seed = 0;
  Json options = Json::object();
  Json inputs = Json::array();

  void input(const std::string& role, const std::string& path) {
    inputs.push_back(
        Json{{"role", role}, {"file", base(path)}, {"digest", digest_hex(read_file(path))}});
  }

  Json to_json() const {
    return Json{{"tool", kToolName}, {"version", kVersion},  {"command", command},
                {"seed", seed},      {"options", options},   {"inputs", inputs}};
  }
};

std::string jsonl(const std::vector<Json>& lines) {
  std::string out;
  for (const Json& j : lines) out += j.dump() + "\n";
  return out;
}

Json rejects_to_json(const std::vector<RowReject>& rejects) {
  Json list = Json::array();
  for (const RowReject& r : rejects) {
    list.push_back(Json{{"row", r.row}, {"image_id", r.image_id}, {"reason", r.reason}});
  }
  return list;
}

struct Common {
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string name;
};

void add_common(CLI::App* app, Common& common, const std::string& default_name) {
  common.name = default_name;
  app->add_option("--seed", common.seed, "Seed for every randomized choice")
      ->capture_default_str();
  app->add_option("--out-dir", common.out_dir, "Directory for output artifacts")
      ->capture_default_str();
  app->add_option("--name", common.name, "Stem of the output file names")->capture_default_str();
}

fs::path out_path(const Common& common, const std::string& suffix) {
  return fs::path(common.out_dir) / (common.name + suffix);
}

// synth ---------------------------------------------------------------------

struct SynthArgs {
  Common common;
  std::string table, schema = default_data("default_schema.json"),
                     lexicon = default_data("default_lexicon.json"),
                     templates = default_data("default_templates.json"), paraphrases;
  std::uint64_t variants = 1;
};

int run_synth(const SynthArgs& a, std::ostream& out) {
  Meta meta{"synth", a.common.seed};
  const AttributeSchema schema = load_schema(a.schema);
  const Lexicon lexicon = load_lexicon(a.lexicon, schema);
  const CompiledLexicon compiled(lexicon, schema);
  const TemplateSet templates = load_templates(a.templates);
  validate_templates(templates, schema, &compiled);
  const AttributeTable table = load_attribute_table(a.table, schema);
  meta.input("table", a.table);
  meta.input("schema", a.schema);
  meta.input("lexicon", a.lexicon);
  meta.input("templates", a.templates);
  meta.options = Json{{"variants", a.variants}, {"paraphrases", base(a.paraphrases)}};

  const std::vector<SynthCaption> captions =
      synth_corpus(table.records, templates, lexicon, a.variants, a.common.seed);
  std::vector<Json> lines;
  for (const SynthCaption& c : captions) {
    lines.push_back(
        Json{{"image_id", c.image_id}, {"variant_index", c.variant_index}, {"text", c.text}});
  }

  Json paraphrase_rejects = Json::array();
  std::size_t accepted = 0;
  if (!a.paraphrases.empty()) {
    meta.input("paraphrases", a.paraphrases);
    std::map<std::string, const AttributeRecord*> by_id;
    for (const AttributeRecord& r : table.records) by_id.emplace(r.image_id, &r);
    std::map<std::string, std::uint64_t> next_variant;
    for (const Caption& p : load_captions(a.paraphrases)) {
      auto it = by_id.find(p.image_id);
      if (it == by_id.end()) {
        paraphrase_rejects.push_back(
            Json{{"image_id", p.image_id}, {"reason", "no valid record for this id"}});
        continue;
      }
      const FaithfulnessCheck check = verify_faithfulness(p.text, *it->second, compiled);
      if (!check.pass) {
        paraphrase_rejects.push_back(Json{{"image_id", p.image_id},
                                          {"missing", check.missing},
                                          {"contradicted", check.contradicted},
                                          {"extraneous", check.extraneous}});
        continue;
      }
      auto [slot, fresh] = next_variant.emplace(p.image_id, a.variants);
      lines.push_back(Json{{"image_id", p.image_id},
                           {"variant_index", slot->second++},
                           {"text", collapse_whitespace(p.text)}});
      ++accepted;
    }
  }

  Json summary{{"meta", meta.to_json()},
               {"records", table.records.size()},
               {"captions", lines.size()},
               {"rejects", rejects_to_json(table.rejects)},
               {"paraphrases_accepted", accepted},
               {"paraphrase_rejects", paraphrase_rejects}};
  write_file(out_path(a.common, ".jsonl"), jsonl(lines));
  write_file(out_path(a.common, ".json"), dump_pretty(summary));
  out << "synth: " << lines.size() << " captions from " << table.records.size() << " records, "
      << table.rejects.size() << " rejected rows\n";
  return 0;
}

// extract -------------------------------------------------------------------

struct ExtractArgs {
  Common common;
  std::string captions, schema = default_data("default_schema.json"),
                        lexicon = default_data("default_lexicon.json");
};

int run_extract(const ExtractArgs& a, std::ostream& out) {
  Meta meta{"extract", a.common.seed};
  const AttributeSchema schema = load_schema(a.schema);
  const CompiledLexicon compiled(load_lexicon(a.lexicon, schema), schema);
  const std::vector<Caption> captions = load_captions(a.captions);
  meta.input("captions", a.captions);
  meta.input("schema", a.schema);
  meta.input("lexicon", a.lexicon);

  std::vector<ExtractionResult> results(captions.size());
  parallel_for(captions.size(), [&](std::size_t i) {
    results[i] = extract_attributes(captions[i].text, compiled, captions[i].image_id);
    results[i].variant_index = captions[i].variant_index;
  });
  std::vector<Json> lines;
  std::size_t with_conflicts = 0;
  for (const ExtractionResult& r : results) {
    lines.push_back(extraction_to_json(r));
    if (!r.conflicts.empty()) ++with_conflicts;
  }
  Json summary{{"meta", meta.to_json()},
               {"captions", results.size()},
               {"with_conflicts", with_conflicts}};
  write_file(out_path(a.common, ".jsonl"), jsonl(lines));
  write_file(out_path(a.common, ".json"), dump_pretty(summary));
  out << "extract: " << results.size() << " captions, " << with_conflicts
      << " with conflicts\n";
  return 0;
}

// eval ----------------------------------------------------------------------

struct EvalArgs {
  Common common;
  std::string pairs, references, candidates;
  std::string external_pairs, external_references, external_candidates;
  std::string metrics = "bleu,rougeL,bertscore";
  std::size_t bleu_max_n = 4;
  std::string smoothing = "epsilon";
  std::string provider = "one_hot";
};

std::vector<CaptionPair> join_captions(const std::vector<Caption>& references,
                                       const std::vector<Caption>& candidates) {
  std::map<std::string, std::string> reference_for;
  for (const Caption& r : references) reference_for.emplace(r.image_id, r.text);
  std::vector<CaptionPair> pairs;
  for (const Caption& c : candidates) {
    auto it = reference_for.find(c.image_id);
    if (it == reference_for.end()) {
      throw InputError("candidate " + c.image_id + " has no reference caption");
    }
    pairs.push_back({c.image_id, collapse_whitespace(it->second), collapse_whitespace(c.text)});
  }
  return pairs;
}

MetricOptions parse_metric_options(const EvalArgs& a) {
  MetricOptions o;
  o.bleu = o.rouge_l = o.bertscore = false;
  std::stringstream list(a.metrics);
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item == "bleu") {
      o.bleu = true;
    } else if (item == "rougeL" || item == "rouge_l") {
      o.rouge_l = true;
    } else if (item == "bertscore") {
      o.bertscore = true;
    } else {
      throw InputError("unknown metric '" + item + "'");
    }
  }
  if (!o.bleu && !o.rouge_l && !o.bertscore) throw InputError("no metrics selected");
  if (a.bleu_max_n == 0) throw InputError("--bleu-max-n must be at least 1");
  o.bleu_max_n = a.bleu_max_n;
  o.smoothing = a.smoothing == "none" ? Smoothing::kNone : Smoothing::kEpsilon;
  return o;
}

std::optional<std::vector<CaptionPair>> load_split(Meta& meta, const std::string& role,
                                                   const std::string& pairs,
                                                   const std::string& references,
                                                   const std::string& candidates) {
  if (!pairs.empty()) {
    if (!references.empty() || !candidates.empty()) {
      throw InputError(role + ": give either a pairs file or references with candidates");
    }
    auto loaded = load_caption_pairs(pairs);
    meta.input(role + "_pairs", pairs);
    return loaded;
  }
  if (references.empty() && candidates.empty()) return std::nullopt;
  if (references.empty() || candidates.empty()) {
    throw InputError(role + ": references and candidates must be given together");
  }
  auto joined = join_captions(load_captions(references), load_captions(candidates));
  meta.input(role + "_references", references);
  meta.input(role + "_candidates", candidates);
  return joined;
}

std::string provider_option(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return "file:" + base(spec.substr(5));
  return spec;
}

int run_eval(const EvalArgs& a, CLI::App* app, std::ostream& out, std::ostream& err) {
  Meta meta{"eval", a.common.seed};
  const MetricOptions options = parse_metric_options(a);
  auto internal = load_split(meta, "internal", a.pairs, a.references, a.candidates);
  if (!internal) {
    err << "eval: --pairs or --references with --candidates is required\n" << app->help();
    return 2;
  }
  auto external =
      load_split(meta, "external", a.external_pairs, a.external_references, a.external_candidates);
  if (options.bertscore && a.provider.rfind("file:", 0) == 0) {
    meta.input("provider", a.provider.substr(5));
  }
  meta.options = Json{{"metrics", a.metrics},
                      {"bleu_max_n", a.bleu_max_n},
                      {"smoothing", to_string(options.smoothing)},
                      {"provider", options.bertscore ? provider_option(a.provider) : ""}};

  std::vector<std::pair<std::string, const std::vector<CaptionPair>*>> splits = {
      {"internal", &*internal}};
  if (external) splits.emplace_back("external", &*external);

  std::vector<MetricSplit> means;
  std::vector<Json> lines;
  for (const auto& [name, pairs] : splits) {
    std::unique_ptr<EmbeddingProvider> provider;
    if (options.bertscore) provider = make_provider(a.provider, *pairs);
    const CorpusScores scores = corpus_scores(*pairs, provider.get(), options);
    means.push_back({name, scores.means});
    for (const PairScores& s : scores.pairs) {
      Json j{{"split", name}};
      j.update(pair_scores_to_json(s));
      lines.push_back(std::move(j));
    }
  }
  Json fragment = metrics_fragment(means, meta.options);
  Json doc{{"meta", meta.to_json()}};
  doc.update(fragment);
  write_file(out_path(a.common, "_pairs.jsonl"), jsonl(lines));
  write_file(out_path(a.common, ".json"), dump_pretty(doc));
  out << render_markdown({metrics_table(fragment)}, "Caption metrics");
  return 0;
}

// attr-eval -----------------------------------------------------------------

struct AttrEvalArgs {
  Common common;
  std::string extractions, truth, schema = default_data("default_schema.json"), plausibility;
  std::string split = "internal";
};

int run_attr_eval(const AttrEvalArgs& a, std::ostream& out) {
  Meta meta{"attr-eval", a.common.seed};
  const AttributeSchema schema = load_schema(a.schema);
  const AttributeTable truth = load_attribute_table(a.truth, schema);
  const std::vector<ExtractionResult> extracted = load_extractions(a.extractions);
  const PlausibilityMap plausibility = a.plausibility.empty()
                                           ? PlausibilityMap::defaults(schema)
                                           : load_plausibility(a.plausibility, schema);
  meta.input("extractions", a.extractions);
  meta.input("truth", a.truth);
  meta.input("schema", a.schema);
  if (!a.plausibility.empty()) meta.input("plausibility", a.plausibility);
  meta.options = Json{{"split", a.split}, {"plausibility", plausibility_to_json(plausibility)}};

  const AttributeReport report =
      evaluate_attributes(extracted, truth.records, schema, plausibility);
  Json fragment = attributes_fragment(report, a.split);
  Json doc{{"meta", meta.to_json()}};
  doc.update(fragment);
  doc["truth_rejects"] = rejects_to_json(truth.rejects);

  std::vector<ReportTable> tables = {attributes_table(fragment)};
  for (ReportTable& t : confusion_tables(fragment)) tables.push_back(std::move(t));
  const std::string md = render_markdown(tables, "Attribute evaluation");
  write_file(out_path(a.common, ".json"), dump_pretty(doc));
  write_file(out_path(a.common, ".md"), md);
  out << render_markdown({tables.front()}, "Attribute evaluation");
  return 0;
}

// classify ------------------------------------------------------------------

struct ClassifyArgs {
  Common common;
  std::string train, test, data, label;
  double test_fraction = 0.2;
};

int run_classify(const ClassifyArgs& a, CLI::App* app, std::ostream& out, std::ostream& err) {
  Meta meta{"classify", a.common.seed};
  EmbeddingSet train, test;
  if (!a.data.empty()) {
    if (!a.train.empty() || !a.test.empty()) {
      throw InputError("classify: give either --data or --train with --test");
    }
    meta.input("data", a.data);
    std::tie(train, test) = split(load_embeddings(a.data), a.label, a.test_fraction, a.common.seed);
    meta.options = Json{{"label", a.label}, {"test_fraction", a.test_fraction}};
  } else if (!a.train.empty() && !a.test.empty()) {
    meta.input("train", a.train);
    meta.input("test", a.test);
    train = load_embeddings(a.train);
    test = load_embeddings(a.test);
    meta.options = Json{{"label", a.label}};
  } else {
    err << "classify: --data or both --train and --test are required\n" << app->help();
    return 2;
  }
  meta.options["head"] = kHead;
  const ClassifierReport report = evaluate(test, fit_prototypes(train, a.label), a.label);
  Json fragment = classifier_fragment(report, kHead);
  fragment["train_size"] = train.size();
  fragment["test_size"] = test.size();
  Json doc{{"meta", meta.to_json()}};
  doc.update(fragment);
  write_file(out_path(a.common, ".json"), dump_pretty(doc));
  out << render_markdown({classifier_table(fragment)}, "Embedding probe");
  return 0;
}

// report --------------------------------------------------------------------

struct ReportArgs {
  Common common;
  std::vector<std::string> fragments;
};

int run_report(const ReportArgs& a, std::ostream& out) {
  Meta meta{"report", a.common.seed};
  std::vector<Json> fragments;
  for (const std::string& path : a.fragments) {
    fragments.push_back(parse_json(read_file(path), path));
    meta.input("fragment", path);
  }
  const ComposedReport report = compose_report(fragments, meta.to_json());
  write_file(out_path(a.common, ".json"), dump_pretty(report.json));
  write_file(out_path(a.common, ".md"), report.markdown);
  out << report.markdown;
  return 0;
}

// validate ------------------------------------------------------------------

struct ValidateArgs {
  std::string schema = default_data("default_schema.json"),
              lexicon = default_data("default_lexicon.json");
  std::string templates, plausibility, table, pairs, captions, extractions, embeddings;
};

int run_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  const AttributeSchema schema = load_schema(a.schema);
  out << "schema: ok (" << schema.size() << " attributes)\n";
  const Lexicon lexicon = load_lexicon(a.lexicon, schema);
  const CompiledLexicon compiled(lexicon, schema);
  out << "lexicon: ok\n";
  if (!a.templates.empty()) {
    const TemplateSet templates = load_templates(a.templates);
    validate_templates(templates, schema, &compiled);
    out << "templates: ok (" << templates.templates().size() << " templates)\n";
  }
  if (!a.plausibility.empty()) {
    load_plausibility(a.plausibility, schema);
    out << "plausibility: ok\n";
  }
  if (!a.pairs.empty()) out << "pairs: ok (" << load_caption_pairs(a.pairs).size() << ")\n";
  if (!a.captions.empty()) out << "captions: ok (" << load_captions(a.captions).size() << ")\n";
  if (!a.extractions.empty()) {
    out << "extractions: ok (" << load_extractions(a.extractions).size() << ")\n";
  }
  if (!a.embeddings.empty()) {
    out << "embeddings: ok (" << load_embeddings(a.embeddings).size() << ")\n";
  }
  if (!a.table.empty()) {
    const AttributeTable table = load_attribute_table(a.table, schema);
    out << "table: " << table.records.size() << " valid rows, " << table.rejects.size()
        << " rejected\n";
    for (const RowReject& r : table.rejects) {
      err << "table row " << r.row << " (" << r.image_id << "): " << r.reason << "\n";
    }
    if (!table.rejects.empty()) return 2;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluation toolkit for blood-cell caption generation and embedding probes",
               kToolName};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  SynthArgs synth;
  CLI::App* synth_cmd = app.add_subcommand("synth", "Render captions from an attribute table");
  add_common(synth_cmd, synth.common, "captions");
  synth_cmd->add_option("--table", synth.table, "Attribute CSV")->required();
  synth_cmd->add_option("--schema", synth.schema, "Attribute schema JSON")->capture_default_str();
  synth_cmd->add_option("--lexicon", synth.lexicon, "Lexicon JSON")->capture_default_str();
  synth_cmd->add_option("--templates", synth.templates, "Caption templates JSON")
      ->capture_default_str();
  synth_cmd->add_option("--variants", synth.variants, "Captions per record")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--paraphrases", synth.paraphrases,
                        "Captions JSONL of external paraphrases to gate and import");

  ExtractArgs extract;
  CLI::App* extract_cmd = app.add_subcommand("extract", "Extract attributes from captions");
  add_common(extract_cmd, extract.common, "extractions");
  extract_cmd->add_option("--captions", extract.captions, "Captions JSONL")->required();
  extract_cmd->add_option("--schema", extract.schema, "Attribute schema JSON")
      ->capture_default_str();
  extract_cmd->add_option("--lexicon", extract.lexicon, "Lexicon JSON")->capture_default_str();

  EvalArgs eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Score candidate captions against references");
  add_common(eval_cmd, eval.common, "metrics");
  eval_cmd->add_option("--pairs", eval.pairs, "Pairs JSONL (image_id, reference, candidate)");
  eval_cmd->add_option("--references", eval.references, "Reference captions JSONL");
  eval_cmd->add_option("--candidates", eval.candidates, "Candidate captions JSONL");
  eval_cmd->add_option("--external-pairs", eval.external_pairs,
                       "Pairs JSONL for the external split");
  eval_cmd->add_option("--external-references", eval.external_references,
                       "Reference captions JSONL for the external split");
  eval_cmd->add_option("--external-candidates", eval.external_candidates,
                       "Candidate captions JSONL for the external split");
  eval_cmd->add_option("--metrics", eval.metrics, "Comma list of bleu, rougeL, bertscore")
      ->capture_default_str();
  eval_cmd->add_option("--bleu-max-n", eval.bleu_max_n, "Highest BLEU n-gram order")
      ->capture_default_str();
  eval_cmd->add_option("--smoothing", eval.smoothing, "BLEU smoothing for zero n-gram counts")
      ->check(CLI::IsMember({"epsilon", "none"}))
      ->capture_default_str();
  eval_cmd->add_option("--provider", eval.provider, "one_hot, hashed:<seed> or file:<path>")
      ->capture_default_str();

  AttrEvalArgs attr;
  CLI::App* attr_cmd = app.add_subcommand("attr-eval", "Score extracted attributes against truth");
  add_common(attr_cmd, attr.common, "attributes");
  attr_cmd->add_option("--extractions", attr.extractions, "Extraction JSONL")->required();
  attr_cmd->add_option("--truth", attr.truth, "Truth attribute CSV")->required();
  attr_cmd->add_option("--schema", attr.schema, "Attribute schema JSON")->capture_default_str();
  attr_cmd->add_option("--plausibility", attr.plausibility, "Plausible confusion pairs JSON");
  attr_cmd->add_option("--split", attr.split, "Split name shown in the report")
      ->capture_default_str();

  ClassifyArgs classify;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Nearest-prototype probe over frozen embeddings");
  add_common(classify_cmd, classify.common, "classifier");
  classify_cmd->add_option("--label", classify.label, "Label to predict")
      ->required()
      ->check(CLI::IsMember({"diagnosis", "cell_type"}));
  classify_cmd->add_option("--train", classify.train, "Training embeddings JSONL");
  classify_cmd->add_option("--test", classify.test, "Test embeddings JSONL");
  classify_cmd->add_option("--data", classify.data, "Embeddings JSONL to split");
  classify_cmd->add_option("--test-fraction", classify.test_fraction,
                           "Per-class test share when splitting --data")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  ReportArgs report;
  CLI::App* report_cmd = app.add_subcommand("report", "Combine fragments into one report");
  add_common(report_cmd, report.common, "report");
  report_cmd->add_option("fragments", report.fragments, "Fragment JSON files")->required();

  ValidateArgs validate;
  CLI::App* validate_cmd = app.add_subcommand("validate", "Check configuration and data files");
  validate_cmd->add_option("--schema", validate.schema, "Attribute schema JSON")
      ->capture_default_str();
  validate_cmd->add_option("--lexicon", validate.lexicon, "Lexicon JSON")->capture_default_str();
  validate_cmd->add_option("--templates", validate.templates, "Caption templates JSON");
  validate_cmd->add_option("--plausibility", validate.plausibility, "Plausibility JSON");
  validate_cmd->add_option("--table", validate.table, "Attribute table CSV");
  validate_cmd->add_option("--pairs", validate.pairs, "Caption pairs JSONL");
  validate_cmd->add_option("--captions", validate.captions, "Captions JSONL");
  validate_cmd->add_option("--extractions", validate.extractions, "Extractions JSONL");
  validate_cmd->add_option("--embeddings", validate.embeddings, "Embeddings JSONL");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (synth_cmd->parsed()) return run_synth(synth, out);
    if (extract_cmd->parsed()) return run_extract(extract, out);
    if (eval_cmd->parsed()) return run_eval(eval, eval_cmd, out, err);
    if (attr_cmd->parsed()) return run_attr_eval(attr, out);
    if (classify_cmd->parsed()) return run_classify(classify, classify_cmd, out, err);
    if (report_cmd->parsed()) return run_report(report, out);
    if (validate_cmd->parsed()) return run_validate(validate, out, err);
  } catch (const InputError& e) {
    err << kToolName << ": error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << kToolName << ": internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace hemeval::cli
