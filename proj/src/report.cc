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


#include "hemeval/report.h"

#include <cstdio>

#include "hemeval/attr_metrics.h"
#include "hemeval/embed_classify.h"
#include "hemeval/error.h"
#include "hemeval/text_metrics.h"

namespace hemeval {
namespace {

constexpr int kMetricDecimals = 2;
constexpr int kPercentDecimals = 2;
constexpr int kClassifierDecimals = 3;

const Json& field(const Json& doc, const char* key, const char* what) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(std::string(what) + " fragment: missing field " + key);
  }
  return doc.at(key);
}

std::string count_cell(const Json& value) {
  if (!value.is_number_unsigned() && !value.is_number_integer()) {
    throw InputError("report: expected an integer count");
  }
  return std::to_string(value.get<long long>());
}

}  // namespace

std::string format_number(const Json& value, int decimals) {
  if (value.is_null()) return "n/a";
  if (!value.is_number()) throw InputError("report: expected a number");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value.get<double>());
  return buf;
}

Json metrics_fragment(const std::vector<MetricSplit>& splits, const Json& options) {
  Json list = Json::array();
  for (const MetricSplit& s : splits) {
    list.push_back(Json{{"split", s.name}, {"aggregate", metric_means_to_json(s.means)}});
  }
  return Json{{"kind", "metrics"}, {"options", options}, {"splits", std::move(list)}};
}

Json attributes_fragment(const AttributeReport& report, const std::string& split) {
  return Json{
      {"kind", "attributes"}, {"split", split}, {"report", attribute_report_to_json(report)}};
}

Json classifier_fragment(const ClassifierReport& report, const std::string& head) {
  return Json{
      {"kind", "classifier"}, {"head", head}, {"report", classifier_report_to_json(report)}};
}

ReportTable metrics_table(const Json& fragment) {
  ReportTable t;
  t.title = "Caption metrics";
  t.columns = {"Split", "Pairs", "BLEU", "ROUGE-L", "BERTScore F1"};
  for (const Json& s : field(fragment, "splits", "metrics")) {
    const Json& agg = field(s, "aggregate", "metrics");
    t.rows.push_back({field(s, "split", "metrics").get<std::string>(),
                      count_cell(field(agg, "pairs", "metrics")),
                      format_number(field(agg, "bleu", "metrics"), kMetricDecimals),
                      format_number(field(agg, "rouge_l_f", "metrics"), kMetricDecimals),
                      format_number(field(agg, "bertscore_f", "metrics"), kMetricDecimals)});
  }
  return t;
}

ReportTable attributes_table(const Json& fragment) {
  const Json& report = field(fragment, "report", "attributes");
  ReportTable t;
  t.title =
      "Attribute accuracy (" + field(fragment, "split", "attributes").get<std::string>() + ")";
  t.columns = {"Feature", "N", "Accuracy (%)", "Mentioned (%)", "Conflicted (%)",
               "Plausible errors (%)"};
  const Json& features = field(report, "features", "attributes");
  const Json& plausible = field(report, "plausible_errors", "attributes");
  if (features.size() != plausible.size()) {
    throw InputError("attributes fragment: feature and plausibility lists differ in length");
  }
  for (std::size_t i = 0; i < features.size(); ++i) {
    const Json& f = features[i];
    const Json& p = plausible[i];
    std::string plausible_cell = "n/a";
    if (!field(p, "no_errors", "attributes").get<bool>()) {
      plausible_cell = format_number(
          Json(100.0 * field(p, "plausible_error_rate", "attributes").get<double>()),
          kPercentDecimals);
    }
    t.rows.push_back({field(f, "feature", "attributes").get<std::string>(),
                      count_cell(field(f, "n", "attributes")),
                      format_number(field(f, "accuracy_pct", "attributes"), kPercentDecimals),
                      format_number(field(f, "mention_rate_pct", "attributes"), kPercentDecimals),
                      format_number(field(f, "conflict_rate_pct", "attributes"), kPercentDecimals),
                      plausible_cell});
  }
  return t;
}

ReportTable classifier_table(const Json& fragment) {
  const Json& report = field(fragment, "report", "classifier");
  ReportTable t;
  t.title = "Embedding probe (" + field(fragment, "head", "classifier").get<std::string>() + ")";
  t.columns = {"Task", "N", "Acc.", "F1"};
  t.rows.push_back({field(report, "task", "classifier").get<std::string>(),
                    count_cell(field(report, "n", "classifier")),
                    format_number(field(report, "accuracy", "classifier"), kClassifierDecimals),
                    format_number(field(report, "weighted_f1", "classifier"),
                                  kClassifierDecimals)});
  return t;
}

std::vector<ReportTable> confusion_tables(const Json& fragment) {
  std::vector<ReportTable> out;
  const Json& report = field(fragment, "report", "attributes");
  for (const Json& m : field(report, "confusion_matrices", "attributes")) {
    ReportTable t;
    t.title = "Confusion matrix: " + field(m, "feature", "attributes").get<std::string>();
    t.columns = {"Truth"};
    for (const Json& c : field(m, "columns", "attributes")) {
      t.columns.push_back(c.get<std::string>());
    }
    const Json& rows = field(m, "rows", "attributes");
    const Json& counts = field(m, "counts", "attributes");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<std::string> row = {rows[r].get<std::string>()};
      for (const Json& c : counts.at(r)) row.push_back(count_cell(c));
      t.rows.push_back(std::move(row));
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::string render_markdown(const std::vector<ReportTable>& tables, const std::string& heading) {
  std::string md = "# " + heading + "\n";
  for (const ReportTable& t : tables) {
    md += "\n## " + t.title + "\n\n|";
    for (const std::string& c : t.columns) md += " " + c + " |";
    md += "\n|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) md += i == 0 ? " --- |" : " ---: |";
    md += "\n";
    for (const auto& row : t.rows) {
      md += "|";
      for (const std::string& cell : row) md += " " + cell + " |";
      md += "\n";
    }
  }
  return md;
}

ComposedReport compose_report(const std::vector<Json>& fragments, const Json& meta) {
  static const char* const kOrder[] = {"metrics", "attributes", "classifier"};
  for (const Json& f : fragments) {
    const Json& kind = field(f, "kind", "report");
    bool known = false;
    for (const char* k : kOrder) known = known || (kind.is_string() && kind == k);
    if (!known) throw InputError("report: unknown fragment kind " + kind.dump());
  }
  std::vector<ReportTable> tables;
  Json ordered = Json::array();
  for (const char* k : kOrder) {
    for (const Json& f : fragments) {
      if (f.at("kind") != k) continue;
      const std::string kind = k;
      if (kind == "metrics") {
        tables.push_back(metrics_table(f));
      } else if (kind == "attributes") {
        tables.push_back(attributes_table(f));
      } else {
        tables.push_back(classifier_table(f));
      }
      Json stripped = f;
      stripped.erase("meta");
      ordered.push_back(std::move(stripped));
    }
  }
  Json table_json = Json::array();
  for (const ReportTable& t : tables) {
    table_json.push_back(Json{{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
  }
  ComposedReport out;
  out.json = Json{{"meta", meta}, {"tables", std::move(table_json)},
                  {"fragments", std::move(ordered)}};
  out.markdown = render_markdown(tables, "hemeval report");
  return out;
}

}  // namespace hemeval
