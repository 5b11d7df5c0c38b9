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


// Combined run report built from the JSON fragments written by the `eval`,
// `attr-eval` and `classify` subcommands.
//
// Each fragment carries a "kind" of "metrics", "attributes" or "classifier".
// The composed report lists one table per fragment, metrics first, then
// attributes, then classifiers; within a kind, input order is kept. Table
// cells are stored as formatted strings in the JSON report and the Markdown
// is rendered from those cells alone.

#pragma once

#include <string>
#include <vector>

#include "hemeval/config_io.h"
#include "hemeval/reports.h"

namespace hemeval {

struct ReportTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct ComposedReport {
  Json json;
  std::string markdown;
};

/// Fixed-point rendering with `decimals` places; "n/a" for null.
std::string format_number(const Json& value, int decimals);

/// One named split of a metrics fragment.
struct MetricSplit {
  std::string name;
  MetricMeans means;
};

Json metrics_fragment(const std::vector<MetricSplit>& splits, const Json& options);
Json attributes_fragment(const AttributeReport& report, const std::string& split);
Json classifier_fragment(const ClassifierReport& report, const std::string& head);

ReportTable metrics_table(const Json& fragment);
ReportTable attributes_table(const Json& fragment);
ReportTable classifier_table(const Json& fragment);

/// One count table per feature: truth values down, extracted values across.
std::vector<ReportTable> confusion_tables(const Json& attributes_fragment);

std::string render_markdown(const std::vector<ReportTable>& tables, const std::string& heading);

/// Throws InputError on a fragment without a known "kind".
ComposedReport compose_report(const std::vector<Json>& fragments, const Json& meta);

}  // namespace hemeval
