// Copyright 2026 The bis-eval Authors
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

#include "bis/bench/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace bis::bench {

using nlohmann::json;

namespace {

json means_json(const MetricMeans& m) {
  return {{"count", m.count}, {"semantic", m.semantic}, {"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}};
}

json instance_json(const InstanceRecord& r) {
  json j = {{"id", r.id},
            {"index", r.index},
            {"db_id", r.db_id},
            {"case_type", std::string(to_string(r.case_type))},
            {"language", r.language},
            {"predicted_sql", r.predicted_sql},
            {"excluded", r.excluded}};
  if (r.excluded) {
    j["exclusion_reason"] = r.exclusion_reason;
    return j;
  }
  const auto& b = r.semantic.breakdown;
  json semantic = {{"value", r.semantic.value},
                   {"verdict", std::string(semantic::to_string(r.semantic.verdict))},
                   {"rule", std::string(semantic::to_string(b.rule))},
                   {"keeps", b.keeps},
                   {"moves", b.moves},
                   {"updates", b.updates},
                   {"inserts", b.inserts},
                   {"deletes", b.deletes},
                   {"ignored_alias_edits", b.ignored_alias_edits},
                   {"size_union", b.size_union},
                   {"diff_count", b.diff_count},
                   {"raw_ratio", b.raw_ratio}};
  if (r.semantic.prediction_error) semantic["prediction_error"] = r.semantic.prediction_error->message;
  json pairs = json::array();
  for (const auto& [p, t] : r.result.matched_pairs) pairs.push_back({p, t});
  json res = {{"precision", r.result.precision},
              {"recall", r.result.recall},
              {"f1", r.result.f1},
              {"verdict", std::string(result::to_string(r.result.verdict))},
              {"matched_pairs", pairs}};
  if (r.result.error) res["error"] = *r.result.error;
  j["semantic"] = std::move(semantic);
  j["result"] = std::move(res);
  return j;
}

std::string fixed(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Category rows follow the fixed taxonomy order rather than alphabetical.
std::vector<std::pair<std::string, MetricMeans>> category_rows(const EvalReport& report) {
  std::vector<std::pair<std::string, MetricMeans>> rows;
  for (Category c : kAllCategories) {
    const std::string key(to_string(c));
    if (auto it = report.by_category.find(key); it != report.by_category.end()) rows.emplace_back(key, it->second);
  }
  return rows;
}

void markdown_table(std::ostringstream& out, const std::string& head,
                    const std::vector<std::pair<std::string, MetricMeans>>& rows) {
  out << "| " << head << " | n | semantic | precision | recall | F1 |\n";
  out << "|---|---:|---:|---:|---:|---:|\n";
  for (const auto& [name, m] : rows) {
    out << "| " << name << " | " << m.count << " | " << fixed(m.semantic, 3) << " | " << fixed(m.precision, 3)
        << " | " << fixed(m.recall, 3) << " | " << fixed(m.f1, 3) << " |\n";
  }
}

}  // namespace

std::string render_json(const EvalReport& report) {
  json by_category = json::object();
  for (const auto& [k, m] : report.by_category) by_category[k] = means_json(m);
  json by_language = json::object();
  for (const auto& [k, m] : report.by_language) by_language[k] = means_json(m);
  json instances = json::array();
  for (const auto& r : report.instances) instances.push_back(instance_json(r));

  const json doc = {{"anchor", report.anchor},
                    {"order_sensitive", report.order_sensitive},
                    {"instance_count", report.instances.size()},
                    {"excluded", report.excluded},
                    {"overall", means_json(report.overall)},
                    {"by_category", std::move(by_category)},
                    {"by_language", std::move(by_language)},
                    {"warnings", report.warnings},
                    {"instances", std::move(instances)}};
  return doc.dump(2) + "\n";
}

std::string render_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "id,index,db_id,case_type,language,excluded,semantic,semantic_verdict,precision,recall,f1,result_verdict\n";
  for (const auto& r : report.instances) {
    out << csv_field(r.id) << ',' << r.index << ',' << csv_field(r.db_id) << ',' << to_string(r.case_type) << ','
        << csv_field(r.language) << ',' << (r.excluded ? "true" : "false") << ',';
    if (r.excluded) {
      out << ",,,,,\n";
      continue;
    }
    out << fixed(r.semantic.value, 6) << ',' << semantic::to_string(r.semantic.verdict) << ','
        << fixed(r.result.precision, 6) << ',' << fixed(r.result.recall, 6) << ',' << fixed(r.result.f1, 6) << ','
        << result::to_string(r.result.verdict) << '\n';
  }
  return out.str();
}

std::string render_markdown(const EvalReport& report) {
  std::ostringstream out;
  out << "# Evaluation summary\n\n";
  out << "- anchor: " << report.anchor << "\n";
  out << "- row order: " << (report.order_sensitive ? "sensitive" : "insensitive") << "\n";
  out << "- instances: " << report.instances.size() << " (" << report.excluded << " excluded)\n\n";
  out << "## Overall\n\n";
  markdown_table(out, "scope", {{"overall", report.overall}});
  out << "\n## By category\n\n";
  markdown_table(out, "category", category_rows(report));
  out << "\n## By language\n\n";
  markdown_table(out, "language", {report.by_language.begin(), report.by_language.end()});
  if (!report.warnings.empty()) {
    out << "\n## Warnings\n\n";
    for (const auto& w : report.warnings) out << "- " << w << "\n";
  }
  return out.str();
}

std::string render_summary(const EvalReport& report) {
  std::ostringstream out;
  char line[160];
  auto row = [&](const std::string& scope, const MetricMeans& m) {
    std::snprintf(line, sizeof line, "%-28s %5zu %9.3f %10.3f %7.3f %6.3f\n", scope.c_str(), m.count, m.semantic,
                  m.precision, m.recall, m.f1);
    out << line;
  };
  std::snprintf(line, sizeof line, "%-28s %5s %9s %10s %7s %6s\n", "scope", "n", "semantic", "precision", "recall",
                "f1");
  out << line;
  row("overall", report.overall);
  for (const auto& [k, m] : category_rows(report)) row("category:" + k, m);
  for (const auto& [k, m] : report.by_language) row("language:" + k, m);
  if (report.excluded > 0) out << "excluded: " << report.excluded << "\n";
  return out.str();
}

}  // namespace bis::bench
